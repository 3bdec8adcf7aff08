"""Exact arithmetic matroids of elliptic arrangements with complex multiplication.

The package goes from a lattice parameterization (square-free m and
tau = (a + b*omega)/c) and a matrix over the resulting endomorphism ring
to the induced arithmetic matroid: subset ranks and multiplicities,
axiom verification, duality, minors, the gcd property, the arithmetic
Tutte polynomial and the Euler characteristic of the complement.
Everything is computed over plain Python integers.
"""

from .quadratic_order import (
    CurveParams,
    FieldParams,
    IntQuadratic,
    ParameterError,
    RingElement,
    generator,
    is_square_free,
    make_curve,
    make_field,
    min_poly,
    scalar,
)
from .linalg import (
    IntMatrix,
    RingMatrix,
    SmithForm,
    conj_transpose,
    expand_lambda,
    expand_order,
    row_select,
    smith_form,
    torsion_order,
    vstack,
)
from .arrangement import (
    EllipticArrangement,
    SubsetReport,
    dual_arrangement,
    multiplicity_via_conj_transpose,
    multiplicity_via_order_basis,
)
from .matroid import (
    ArithmeticMatroid,
    BiPoly,
    Molecule,
    Violation,
    char_poly,
    e2_poincare,
    euler_characteristic,
    find_molecule,
    format_subset,
    from_arrangement,
    gcd_property,
    p_equivalence_holds,
    poly_eval,
    poly_str,
    rho,
    submasks,
    tutte,
    verify_a1,
    verify_a2,
    verify_matroid,
    verify_p,
    verify_p1,
    verify_p2,
)
from .fileio import (
    ArrangementFormatError,
    load_arrangement,
    parse_document,
    parse_text,
    random_arrangement,
    save_arrangement,
    serialize_arrangement,
)

__version__ = "0.1.0"
