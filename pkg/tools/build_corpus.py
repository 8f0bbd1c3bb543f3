"""Build the shipped corpus under corpus/.

Run from the repository root:  python tools/build_corpus.py

Component modes are pinned here: small shapes are exhausted (the manifest
then proves what does and does not exist in them), the larger shapes are
covered by seeded samples.  Shapes whose torsion exponent is too large for
the declared precision are recorded as excluded.  Re-running reproduces the
corpus byte for byte.
"""

from pathlib import Path

from logcap.forge import ComponentSpec, SearchParams, build_corpus

ROOT = Path(__file__).resolve().parent.parent

L2 = SearchParams(
    prime=2,
    precision=4,
    g_orders_list=((2,), (4,), (2, 2)),
    atilde_orders_list=((), (2,), (4,), (8,), (2, 2), (2, 4), (2, 2, 2)),
    seed=2024,
    ceiling=50_000,
    samples=2,
)

L2_COMPONENTS = [
    ComponentSpec((2,), ()),
    ComponentSpec((2,), (2,)),
    ComponentSpec((2,), (4,)),
    ComponentSpec((2,), (8,)),  # excluded by the precision rule, recorded
    ComponentSpec((2,), (2, 2)),
    ComponentSpec((2,), (2, 4)),
    ComponentSpec((2,), (2, 2, 2)),
    ComponentSpec((4,), ()),
    ComponentSpec((4,), (2,)),
    ComponentSpec((4,), (4,)),  # excluded by the precision rule, recorded
    ComponentSpec((4,), (2, 2)),
    ComponentSpec((4,), (2, 2, 2), mode="sample", samples=2),
    ComponentSpec((2, 2), ()),
    ComponentSpec((2, 2), (2,)),
    ComponentSpec((2, 2), (4,)),
    ComponentSpec((2, 2), (2, 2)),
    ComponentSpec((2, 2), (2, 4), mode="sample", samples=2),
    ComponentSpec((2, 2), (2, 2, 2), mode="sample", samples=2),
]

L3 = SearchParams(
    prime=3,
    precision=3,
    g_orders_list=((3,), (3, 3)),
    atilde_orders_list=((), (3,), (9,), (3, 3)),
    seed=307,
    ceiling=50_000,
    samples=3,
)

L3_COMPONENTS = [
    ComponentSpec((3,), ()),
    ComponentSpec((3,), (3,)),
    ComponentSpec((3,), (9,)),  # excluded by the precision rule, recorded
    ComponentSpec((3,), (3, 3), mode="sample", samples=3),
    ComponentSpec((3, 3), ()),
    ComponentSpec((3, 3), (3,), mode="sample", samples=4),
]


def main() -> None:
    m2 = build_corpus(L2, L2_COMPONENTS, ROOT / "corpus" / "l2")
    m3 = build_corpus(L3, L3_COMPONENTS, ROOT / "corpus" / "l3")
    total = sum(c["count"] for c in m2["components"]) + sum(
        c["count"] for c in m3["components"]
    )
    nzb = sum(c.get("nonzero_boundary", 0) for c in m2["components"]) + sum(
        c.get("nonzero_boundary", 0) for c in m3["components"]
    )
    print(f"corpus: {total} instances, {nzb} with nonzero boundary module")


if __name__ == "__main__":
    main()
