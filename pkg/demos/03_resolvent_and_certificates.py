"""The resolvent module, relation certificates, and the operator delta.

The resolvent module B = A + I_G carries the twisted action

    sigma * a = a^sigma,   sigma * (tau - 1) = f(sigma, tau) + sigma(tau - 1)

and the operator w = gamma - 1 with w^2 = 0.  For generators b_i = tau_i - 1
the relations e_i b_i = sum mu_ij * b_j + w * sum nu_ij * b_j produce a
matrix M with det M = Tr exactly; the omega part of det(M - wN) is the
operator delta with Tr = w delta on the degree-zero part.

Here we enumerate every instance with l = 3, G = Z/3, torsion Z/3 and watch
delta change with the arithmetic of the instance.
"""

from logcap.forge import SearchParams, enumerate_instances
from logcap.groupring import trace_element
from logcap.resolvent import (
    ResolventElt,
    certificate_determinants,
    context,
    delta,
    omega_act,
    relation_matrices,
    star_act,
    trace,
)

params = SearchParams(3, 3, ((3,),), ((3,),))
instances = list(enumerate_instances(params))
print(f"{len(instances)} instances with l=3, G=Z/3, torsion Z/3 (one per coboundary class)\n")

for k, inst in enumerate(instances):
    cert = relation_matrices(inst)
    det_m, _ = certificate_determinants(inst, cert)
    tr = trace_element(inst.group, inst.ring)
    d = delta(inst, cert)
    ctx = context(inst)
    image = inst.span_a([trace(inst, b) for b in ctx.bt_basis_elements()])
    order = image.order() // inst.zero_a().order()
    print(f"instance {k}: det M = Tr: {det_m == tr},  delta = {d},  capitulation image order = {order}")

# On the last instance, check the operator identity Tr = w delta on the
# degree-zero generators, coordinate by coordinate.
inst = instances[-1]
cert = relation_matrices(inst)
d = delta(inst, cert)
ctx = context(inst)
print("\noperator identity on the degree-zero part of the last instance:")
for b in ctx.bt_basis_elements():
    lhs = trace(inst, b)
    rhs = omega_act(inst, star_act(inst, d, b))
    print(f"  Tr({b.to_vec()}) = {lhs} = w(delta * .) -> {rhs.a}: {lhs == rhs.a}")
