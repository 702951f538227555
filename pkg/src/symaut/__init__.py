"""Exact construction and checking of symmetric-condition automorphisms of X^n.

End(X) is modelled by the order Z[theta] of a totally real number field;
endomorphisms of X^n are n x n matrices over that order.
"""

from .numfield import (
    OrderDescriptor,
    OrderElement,
    Suborder,
    UnitCertificate,
    charpoly,
    fundamental_unit_quadratic,
    is_unit,
    make_order,
    make_suborder,
    mul,
    norm,
    power,
    power_into_suborder,
    quadratic_order,
    regular_representation,
    search_unit,
    suborder_contains,
)
from .matforms import (
    OrderMatrix,
    SymmetricForm,
    apply_perm,
    circulant,
    det,
    det_closed_form,
    invert,
    is_natural_form,
    mat_mul,
    recognize_symmetric_form,
)
from .construct import (
    AutomorphismCertificate,
    build_fg,
    forge,
    pigeonhole_exponents,
    quad_conjugate_construction,
    verify_certificate,
)

__version__ = "0.1.0"
