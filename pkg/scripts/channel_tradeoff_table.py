#!/usr/bin/env python3
"""Print how fidelity, transferred entanglement and correlation information
trade off against the channel entanglement.

The more entangled the input, the lower the fidelity over an imperfect
channel, yet the more entanglement survives in the output; both effects are
visible along each column below.
"""

from entport.teleport import (
    fidelity_closed_form,
    final_entanglement_closed_form,
    final_information_closed_form,
)

E0_VALUES = (0.0, 0.3, 0.6, 1.0)
EW_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0)


def main() -> None:
    header = f"{'ew':>5} | " + " | ".join(f"e0={e0:<4}" for e0 in E0_VALUES)
    for label, func in (
        ("fidelity", fidelity_closed_form),
        ("final entanglement", final_entanglement_closed_form),
        ("correlation information", lambda e0, ew: final_information_closed_form(e0, ew).correlation),
    ):
        print(f"\n{label}")
        print(header)
        print("-" * len(header))
        for ew in EW_VALUES:
            cells = " | ".join(f"{func(e0, ew):6.4f}" for e0 in E0_VALUES)
            print(f"{ew:>5} | {cells}")


if __name__ == "__main__":
    main()
