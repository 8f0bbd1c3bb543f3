"""Running the check catalogue.

V1..V10 assert, on one validated instance at a time: the transfer/trace
diagram (V1), the shape of the denominator I_G * B (V2), the determinant
identities and the containment of the capitulation image (V3, V6), the
genus decomposition (V4), the omega identities (V5), the main statement
that ambiguous classes capitulate (V7), the vanishing of delta on the
boundary module (V8), the index remark (V9), and agreement with the
brute-force oracle (V10).

The instance here has G = (Z/3)^2 with an asymmetric factor set, so the
boundary module is nonzero and V8 is not vacuous.
"""

from logcap.instance import build_instance
from logcap.verifier import report_markdown, run_all

table = {}
for g1 in range(3):
    for g2 in range(3):
        for h1 in range(3):
            for h2 in range(3):
                table[((g1, g2), (h1, h2))] = ((2 * g1 * h2 + h1 * g2) % 3,)
ident = [[1, 0], [0, 1]]
inst = build_instance(3, 3, [3, 3], [3], [ident, ident], table)

report = run_all(inst)
print(report_markdown("G = (Z/3)^2 with asymmetric factor set", report))

v8 = next(v for v in report.verdicts if v.check_id == "V8")
print("boundary module order:", v8.witness["boundary_order"], "(delta kills it)")
v9 = next(v for v in report.verdicts if v.check_id == "V9")
print("ambiguous index:", v9.witness["index"], "= |G| =", v9.witness["group_order"])
