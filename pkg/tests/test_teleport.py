import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entport.entanglement import negativity
from entport.information import information_decomposition
from entport.states import (
    ID2,
    SIGMA_X,
    WernerChannel,
    hs_decompose,
    random_local_unitary,
    rotated_pure_state,
    seed_state,
)
from entport.teleport import (
    BobStrategy,
    correlation_info_from_entanglement,
    fidelity_closed_form,
    fidelity_general,
    final_entanglement_closed_form,
    final_information_closed_form,
    final_state_closed_form,
    optimal_strategy,
    simulate,
    _run_protocol,
)

E0_GRID = [round(0.1 * i, 10) for i in range(11)]
PHI_GRID = [-1.0 + 0.25 * i for i in range(9)]

KET00_PROJECTOR = np.diag([1.0, 0, 0, 0]).astype(complex)


def identity_strategy():
    return BobStrategy(corrections=(ID2, ID2, ID2, ID2))


class TestSimulate:
    def test_all_outcomes_equally_likely(self):
        for e0 in (0.0, 0.5, 1.0):
            for phi in (-1.0, 0.0, 0.7):
                report = simulate(seed_state(e0), WernerChannel(phi))
                np.testing.assert_allclose(report.probabilities, 0.25, atol=1e-12)
                assert abs(report.probabilities.sum() - 1.0) < 1e-10

    def test_outcome_probabilities_independent_of_strategy(self):
        report = simulate(seed_state(0.4), WernerChannel(0.3), identity_strategy())
        np.testing.assert_allclose(report.probabilities, 0.25, atol=1e-12)

    def test_measurement_independent_final_state(self):
        for e0 in (0.0, 0.6, 1.0):
            for phi in (-0.5, 0.0, 0.5, 1.0):
                report = simulate(seed_state(e0), WernerChannel(phi))
                for state in report.final_states:
                    np.testing.assert_allclose(state, report.final_state, atol=1e-10)

    def test_perfect_channel_reproduces_input(self):
        rho = seed_state(0.6)
        report = simulate(rho, WernerChannel(1.0))
        np.testing.assert_allclose(report.final_state, rho, atol=1e-10)
        assert report.averaged_fidelity == pytest.approx(1.0, abs=1e-10)

    def test_wrong_correction_degrades_an_outcome(self):
        # With all corrections forced to the identity, outcome 1 should have
        # been fixed with sigma_x and so its conditional state is wrong even
        # over a perfect channel.
        rho = seed_state(0.0)
        report = simulate(rho, WernerChannel(1.0), identity_strategy())
        assert np.max(np.abs(report.final_states[1] - rho)) > 0.4

    def test_identity_strategy_is_suboptimal(self):
        fid_optimal = fidelity_general(seed_state(0.0), WernerChannel(1.0))
        fid_identity = fidelity_general(
            seed_state(0.0), WernerChannel(1.0), identity_strategy()
        )
        assert fid_identity < fid_optimal - 0.1

    def test_negligible_outcome_is_flagged(self):
        # A degenerate (non-Werner) channel state makes the singlet outcome
        # impossible: |0000> has no overlap with the singlet on (2, 3).
        probs, states = _run_protocol(
            KET00_PROJECTOR, KET00_PROJECTOR, optimal_strategy()
        )
        assert probs[0] == pytest.approx(0.0, abs=1e-14)
        assert states[0] is None
        assert abs(probs.sum() - 1.0) < 1e-12

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            simulate(np.eye(4), WernerChannel(0.5))  # trace 4
        with pytest.raises(ValueError):
            simulate(seed_state(0.5), 0.5)  # bare float channel

    def test_strategy_validation(self):
        with pytest.raises(ValueError):
            BobStrategy(corrections=(ID2, ID2, ID2))
        with pytest.raises(ValueError):
            BobStrategy(corrections=(ID2, ID2, ID2, 2 * ID2))


class TestFinalStateClosedForm:
    def test_perfect_channel_is_identity_map(self):
        form = hs_decompose(seed_state(0.6))
        out = final_state_closed_form(form, WernerChannel(1.0))
        np.testing.assert_allclose(out.a, form.a, atol=0)
        np.testing.assert_allclose(out.b, form.b, atol=1e-15)
        np.testing.assert_allclose(out.c, form.c, atol=1e-15)

    def test_maximally_mixed_channel_wipes_correlations(self):
        form = hs_decompose(seed_state(0.6))
        out = final_state_closed_form(form, WernerChannel(-0.5))
        np.testing.assert_allclose(out.a, form.a, atol=0)
        np.testing.assert_allclose(out.b, 0.0, atol=1e-15)
        np.testing.assert_allclose(out.c, 0.0, atol=1e-15)

    def test_scale_factor_fixture(self):
        out = final_state_closed_form(hs_decompose(seed_state(0.6)), WernerChannel(0.5))
        np.testing.assert_allclose(out.b, [0, 0, (2 / 3) * 0.8], atol=1e-12)
        np.testing.assert_allclose(
            out.c, (2 / 3) * np.diag([0.6, -0.6, 1.0]), atol=1e-12
        )

    def test_matches_simulation_over_grid(self):
        for e0 in (0.0, 0.3, 0.8, 1.0):
            for phi in PHI_GRID:
                channel = WernerChannel(phi)
                closed = final_state_closed_form(hs_decompose(seed_state(e0)), channel)
                sim = hs_decompose(simulate(seed_state(e0), channel).final_state)
                np.testing.assert_allclose(closed.a, sim.a, atol=1e-10)
                np.testing.assert_allclose(closed.b, sim.b, atol=1e-10)
                np.testing.assert_allclose(closed.c, sim.c, atol=1e-10)


class TestFidelity:
    def test_closed_form_anchors(self):
        assert fidelity_closed_form(0.0, 0.0) == pytest.approx(2 / 3, abs=1e-15)
        assert fidelity_closed_form(0.0, 0.7) == pytest.approx((0.7 + 2) / 3, abs=1e-15)
        assert fidelity_closed_form(1.0, 0.0) == pytest.approx(0.5, abs=1e-15)
        for e0 in E0_GRID:
            assert fidelity_closed_form(e0, 1.0) == pytest.approx(1.0, abs=1e-15)

    def test_closed_form_range(self):
        for e0 in E0_GRID:
            for ew in E0_GRID:
                assert 0.5 - 1e-12 <= fidelity_closed_form(e0, ew) <= 1.0 + 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            fidelity_closed_form(1.2, 0.5)
        with pytest.raises(ValueError):
            fidelity_closed_form(0.5, -0.1)

    def test_simulation_matches_closed_form_on_nonnegative_phi(self):
        for e0 in E0_GRID:
            for phi in (0.0, 0.25, 0.5, 0.75, 1.0):
                sim = fidelity_general(seed_state(e0), WernerChannel(phi))
                assert sim == pytest.approx(fidelity_closed_form(e0, phi), abs=1e-10)

    def test_perfect_channel_unit_fidelity_for_any_pure_state(self, rng):
        for _ in range(5):
            rho = rotated_pure_state(
                rng.random(), random_local_unitary(rng), random_local_unitary(rng)
            )
            assert fidelity_general(rho, WernerChannel(1.0)) == pytest.approx(
                1.0, abs=1e-10
            )

    @settings(deadline=None, max_examples=25)
    @given(
        seed=st.integers(min_value=0, max_value=10**9),
        e0=st.floats(min_value=0.0, max_value=1.0),
    )
    def test_invariant_under_local_rotations_of_the_input(self, seed, e0):
        gen = np.random.default_rng(seed)
        rotated = rotated_pure_state(
            e0, random_local_unitary(gen), random_local_unitary(gen)
        )
        channel = WernerChannel(0.5)
        f_seed = fidelity_general(seed_state(e0), channel)
        f_rotated = fidelity_general(rotated, channel)
        assert abs(f_seed - f_rotated) < 1e-10

    def test_decreasing_in_initial_entanglement(self):
        for ew in (0.0, 0.5):
            values = [fidelity_closed_form(e0, ew) for e0 in E0_GRID]
            assert all(b - a < -1e-12 for a, b in zip(values, values[1:]))


class TestFinalEntanglement:
    def test_unentangled_channel_transfers_nothing(self):
        for e0 in E0_GRID:
            assert final_entanglement_closed_form(e0, 0.0) == 0.0

    def test_perfect_channel_preserves_entanglement(self):
        for e0 in E0_GRID:
            assert final_entanglement_closed_form(e0, 1.0) == pytest.approx(e0, abs=1e-12)

    def test_partially_entangled_channel_transfers_some(self):
        for e0 in (0.1, 0.5, 1.0):
            for ew in (0.1, 0.5, 1.0):
                assert final_entanglement_closed_form(e0, ew) > 1e-6

    def test_fixture_value(self):
        assert final_entanglement_closed_form(1.0, 0.5) == pytest.approx(0.5, abs=1e-15)

    def test_matches_simulation_on_full_grid(self):
        for e0 in E0_GRID:
            for phi in PHI_GRID:
                channel = WernerChannel(phi)
                sim = simulate(seed_state(e0), channel)
                closed = final_entanglement_closed_form(e0, channel.ew)
                assert sim.final_entanglement == pytest.approx(closed, abs=1e-10)

    def test_nondecreasing_in_channel_entanglement(self):
        for e0 in (0.5, 1.0):
            values = [final_entanglement_closed_form(e0, ew) for ew in E0_GRID]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            final_entanglement_closed_form(-0.1, 0.5)


class TestFinalInformation:
    def test_perfect_channel_preserves_information(self):
        for e0 in (0.0, 0.5, 1.0):
            r = final_information_closed_form(e0, 1.0)
            assert r.total == pytest.approx(2.0, abs=1e-12)
            assert r.individual_a == pytest.approx(1 - e0**2, abs=1e-12)
            assert r.individual_b == pytest.approx(1 - e0**2, abs=1e-12)
            assert r.correlation == pytest.approx(2 * (4 - e0**2) * e0**2 / 3, abs=1e-12)

    def test_product_input_has_no_correlation_information(self):
        for ew in (0.0, 0.4, 1.0):
            r = final_information_closed_form(0.0, ew)
            assert r.correlation == 0.0
            assert r.individual_a == pytest.approx(1.0, abs=1e-15)
            assert r.individual_b == pytest.approx(((2 * ew + 1) / 3) ** 2, abs=1e-15)

    def test_maximally_entangled_through_unentangled_channel(self):
        r = final_information_closed_form(1.0, 0.0)
        assert r.total == pytest.approx(2 / 9, abs=1e-15)
        assert r.individual_a == 0.0
        assert r.individual_b == 0.0
        assert r.correlation == pytest.approx(2 / 9, abs=1e-15)

    def test_matches_simulation_on_nonnegative_phi(self):
        for e0 in E0_GRID:
            for phi in (0.0, 0.25, 0.5, 0.75, 1.0):
                sim = simulate(seed_state(e0), WernerChannel(phi)).final_information
                closed = final_information_closed_form(e0, phi)
                assert sim.total == pytest.approx(closed.total, abs=1e-10)
                assert sim.individual_a == pytest.approx(closed.individual_a, abs=1e-10)
                assert sim.individual_b == pytest.approx(closed.individual_b, abs=1e-10)
                assert sim.correlation == pytest.approx(closed.correlation, abs=1e-10)

    def test_total_decreases_with_initial_entanglement(self):
        for ew in (0.0, 0.5):
            totals = [final_information_closed_form(e0, ew).total for e0 in E0_GRID]
            assert all(b < a for a, b in zip(totals, totals[1:]))
            assert all(t <= 2.0 + 1e-12 for t in totals)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            final_information_closed_form(0.5, 1.5)


class TestCorrelationInfoFromEntanglement:
    def test_zero_iff_zero(self):
        assert correlation_info_from_entanglement(0.0, 0.5) == 0.0
        for e in (0.01, 0.3, 0.9):
            assert correlation_info_from_entanglement(e, 0.5) > 0.0

    def test_perfect_channel_reduces_to_initial_form(self):
        for e0 in (0.2, 0.6, 1.0):
            got = correlation_info_from_entanglement(e0, 1.0)
            assert got == pytest.approx(2 * (4 - e0**2) * e0**2 / 3, abs=1e-12)

    def test_consistent_with_information_transfer(self):
        for ew in (0.25, 0.5, 0.75, 1.0):
            for e0 in E0_GRID:
                e_final = final_entanglement_closed_form(e0, ew)
                expected = final_information_closed_form(e0, ew).correlation
                got = correlation_info_from_entanglement(e_final, ew)
                assert got == pytest.approx(expected, abs=1e-10)

    def test_fixture_pair(self):
        e_final = final_entanglement_closed_form(0.8, 0.5)
        got = correlation_info_from_entanglement(e_final, 0.5)
        expected = final_information_closed_form(0.8, 0.5).correlation
        assert got == pytest.approx(expected, abs=1e-10)

    def test_rejects_unentangled_channel(self):
        with pytest.raises(ValueError):
            correlation_info_from_entanglement(0.5, 0.0)
        with pytest.raises(ValueError):
            correlation_info_from_entanglement(0.5, -0.2)


def test_simulated_information_decomposition_consistency():
    # The report's information block is exactly the decomposition of the
    # averaged final state.
    report = simulate(seed_state(0.7), WernerChannel(0.6))
    direct = information_decomposition(report.final_state)
    assert report.final_information == direct
    assert report.final_entanglement == negativity(report.final_state).value


def test_sigma_x_correction_repairs_outcome_one():
    # Conditioned on outcome 1 the uncorrected state differs from the input
    # by a sigma_x on particle 4; the optimal strategy undoes exactly that.
    rho = seed_state(0.0)
    wrong = BobStrategy(corrections=(ID2, ID2, ID2, ID2))
    right = BobStrategy(corrections=(ID2, SIGMA_X, ID2, ID2))
    report_wrong = simulate(rho, WernerChannel(1.0), wrong)
    report_right = simulate(rho, WernerChannel(1.0), right)
    assert np.max(np.abs(report_wrong.final_states[1] - rho)) > 0.4
    np.testing.assert_allclose(report_right.final_states[1], rho, atol=1e-10)
