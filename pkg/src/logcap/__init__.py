"""logcap: exact verification of capitulation identities for degree-zero
logarithmic class groups, on finitely presented instances.

The library side is organized bottom-up:

* ``lattice``   exact linear algebra over Z/l^n (Howell forms, solve, kernels)
* ``groupring`` abelian l-groups, group rings, the omega-truncated extension
* ``instance``  the instance data model, validation, coboundary shifts, JSON
* ``extension`` the extension group U on A x G: transfer, derived subgroups
* ``resolvent`` the resolvent module B, relation certificates, delta
* ``verifier``  the check catalogue V1..V10 with verdicts and reports
* ``forge``     instance enumeration/sampling and the brute-force oracle
"""

from .groupring import AbelianLGroup, GroupRingElt, OmegaRingElt, trace_element
from .instance import (
    Instance,
    build_instance,
    coboundary_shift,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    save_instance,
    validate,
)
from .lattice import (
    Submodule,
    ZMod,
    ZModMatrix,
    ZModRing,
    kernel,
    normal_form,
    preimage,
    quotient_order,
    solve,
    solve_matrix,
)
from .resolvent import (
    RelationCertificate,
    ResolventElt,
    delta,
    omega_act,
    relation_matrices,
    star_act,
    trace,
)
from .verifier import run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "AbelianLGroup",
    "GroupRingElt",
    "OmegaRingElt",
    "Instance",
    "RelationCertificate",
    "ResolventElt",
    "Submodule",
    "ZMod",
    "ZModMatrix",
    "ZModRing",
    "build_instance",
    "coboundary_shift",
    "delta",
    "instance_from_dict",
    "instance_to_dict",
    "kernel",
    "load_instance",
    "normal_form",
    "preimage",
    "omega_act",
    "quotient_order",
    "relation_matrices",
    "run_all",
    "run_check",
    "save_instance",
    "solve",
    "solve_matrix",
    "star_act",
    "trace",
    "trace_element",
    "validate",
]
