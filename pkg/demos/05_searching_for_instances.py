"""Enumerating and sampling instances.

For a fixed action configuration the admissible factor sets form a finite
module, so the search enumerates that module exactly and keeps one
representative per coboundary class.  Spaces too large for exhaustion are
covered by seeded samples; either way the output is deterministic and the
manifest records exactly what was covered.
"""

import json
import tempfile
from pathlib import Path

from logcap.forge import (
    ComponentSpec,
    SearchParams,
    build_corpus,
    enumerate_instances,
    random_instance,
)
from logcap.instance import instance_to_dict

params = SearchParams(2, 4, ((2,), (4,)), ((), (2,), (4,)), seed=1)

print("exhaustive enumeration over G in {Z/2, Z/4}, torsion in {0, Z/2, Z/4}:")
for inst in enumerate_instances(params):
    data = instance_to_dict(inst)
    print(" ", data["G"]["orders"], data["A"]["atilde_orders"], data["A"]["action"])

# a seeded sample from a bigger shape
sample = random_instance(SearchParams(2, 4, ((2, 2),), ((2, 2),), seed=6))
print("\nsampled Klein-four instance:", json.dumps(instance_to_dict(sample))[:110], "...")

# a corpus directory with its manifest
with tempfile.TemporaryDirectory() as tmp:
    manifest = build_corpus(
        params,
        [ComponentSpec((2,), (2,)), ComponentSpec((4,), (2,)), ComponentSpec((2,), (8,))],
        Path(tmp) / "corpus",
    )
    print("\nmanifest components:")
    for comp in manifest["components"]:
        print(
            f"  G={comp['G']} T={comp['Atilde']}: mode={comp['mode']}, "
            f"count={comp['count']}, exhausted={comp.get('exhausted')}"
            + (f" ({comp['skip_reason']})" if "skip_reason" in comp else "")
        )
