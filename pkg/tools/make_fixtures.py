"""Regenerate the fixture instances shipped under fixtures/.

Run from the repository root:  python tools/make_fixtures.py
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

FIXTURES = {
    # the canonical small instance: l=2, n=3, G = Z/2, torsion Z/2,
    # tau fixes alpha and sends gamma to gamma + alpha, zero factor set
    "e1.json": {
        "prime": 2,
        "precision": 3,
        "G": {"orders": [2]},
        "A": {"atilde_orders": [2], "action": {"tau_1": [[1, 0], [1, 1]]}},
        "cocycle": {},
    },
    # same shape but tau acts trivially on gamma: the derived subgroup is
    # trivial, strictly smaller than the torsion part, so H1 fails
    "h1_violating.json": {
        "prime": 2,
        "precision": 3,
        "G": {"orders": [2]},
        "A": {"atilde_orders": [2], "action": {"tau_1": [[1, 0], [0, 1]]}},
        "cocycle": {},
    },
    # G = Z/4 with one corrupted table entry a_{tau, tau^2} = alpha: the
    # associativity identity fails at the triple (tau, tau, tau) while
    # normalization and the inverse convention still hold
    "corrupted_cocycle.json": {
        "prime": 2,
        "precision": 4,
        "G": {"orders": [4]},
        "A": {"atilde_orders": [2], "action": {"tau_1": [[1, 0], [1, 1]]}},
        "cocycle": {"1,2": [1]},
    },
}


def main() -> None:
    out_dir = ROOT / "fixtures"
    out_dir.mkdir(exist_ok=True)
    for name, payload in FIXTURES.items():
        path = out_dir / name
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
