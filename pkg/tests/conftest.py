import random
from pathlib import Path

import pytest

from logcap.instance import build_instance, load_instance

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
CORPUS = REPO / "corpus"


@pytest.fixture(scope="session")
def e1():
    """l=2, n=3, G=Z/2, torsion Z/2, tau: alpha -> alpha, gamma -> gamma+alpha."""
    return build_instance(2, 3, [2], [2], [[[1, 0], [1, 1]]], {})


@pytest.fixture(scope="session")
def inst33():
    """l=3, G=(Z/3)^2, torsion Z/3, trivial action, asymmetric factor set
    z(g, h) = 2 g1 h2 + h1 g2: nonzero boundary module, H1 through the
    commutators alone."""
    table = {}
    for g1 in range(3):
        for g2 in range(3):
            for h1 in range(3):
                for h2 in range(3):
                    table[((g1, g2), (h1, h2))] = ((2 * g1 * h2 + h1 * g2) % 3,)
    ident = [[1, 0], [0, 1]]
    return build_instance(3, 3, [3, 3], [3], [ident, ident], table)


@pytest.fixture(scope="session")
def trivial_atilde():
    """G = Z/2 with trivial torsion: everything degenerates to zero."""
    return build_instance(2, 3, [2], [], [[[1]]], {})


@pytest.fixture(scope="session")
def h1_violating():
    return load_instance(FIXTURES / "h1_violating.json")


@pytest.fixture(scope="session")
def corrupted():
    return load_instance(FIXTURES / "corrupted_cocycle.json")


@pytest.fixture()
def rng():
    return random.Random(20240811)


def corpus_paths():
    if not CORPUS.exists():
        return []
    out = []
    for sub in sorted(CORPUS.iterdir()):
        if sub.is_dir():
            out.extend(sorted(p for p in sub.glob("*.json") if p.name != "manifest.json"))
    return out
