"""Generator matrices for the catalog groups.

SL2: cyclic, binary dihedral, and the binary tetrahedral / octahedral /
icosahedral groups (quaternion-unit and Klein-style matrices).  SL3: the
Delta(3n^2) / Delta(6n^2) series from the standard monomial construction,
and the exceptional groups as matrices from the classical classification
literature.  Every set is validated downstream against its expected order
and Molien series, which is the acceptance test for the data.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .groups import GroupElement

zeta = CyclotomicNumber.zeta
rat = CyclotomicNumber.from_rational


def _m(rows) -> GroupElement:
    out = []
    for row in rows:
        out.append(
            [
                x if isinstance(x, CyclotomicNumber) else rat(Fraction(x))
                for x in row
            ]
        )
    return GroupElement(out)


# -- SL2 ----------------------------------------------------------------


def cyclic_sl2(ell: int) -> list[GroupElement]:
    """C_ell = <diag(z, z^-1)> with z = zeta_ell."""
    z = zeta(ell)
    return [_m([[z, 0], [0, z ** (ell - 1)]])]


def binary_dihedral(n: int) -> list[GroupElement]:
    """Binary dihedral group of order 4n."""
    z = zeta(2 * n)
    a = _m([[z, 0], [0, z ** (2 * n - 1)]])
    b = _m([[0, 1], [-1, 0]])
    return [a, b]


def binary_tetrahedral() -> list[GroupElement]:
    """Order 24; the unit quaternions i and (-1+i+j+k)/2 as 2x2 matrices."""
    i = zeta(4)
    half = Fraction(1, 2)
    qi = _m([[i, 0], [0, -i]])
    omega = _m(
        [
            [(rat(-1) + i) * rat(half), (rat(1) + i) * rat(half)],
            [(rat(-1) + i) * rat(half), (rat(-1) - i) * rat(half)],
        ]
    )
    return [qi, omega]


def binary_octahedral() -> list[GroupElement]:
    """Order 48; binary tetrahedral plus diag(zeta8, zeta8^7)."""
    e8 = zeta(8)
    return binary_tetrahedral() + [_m([[e8, 0], [0, e8**7]])]


def binary_icosahedral() -> list[GroupElement]:
    """Order 120; Klein's generators over Q(zeta5)."""
    e = zeta(5)
    s = _m([[-(e**3), 0], [0, -(e**2)]])
    # 1/sqrt5 = (2 e + 2 e^4 + 1)/5.
    inv_sqrt5 = (rat(2) * e + rat(2) * e**4 + rat(1)) * rat(Fraction(1, 5))
    t = _m(
        [
            [(e**4 - e) * inv_sqrt5, (e**2 - e**3) * inv_sqrt5],
            [(e**2 - e**3) * inv_sqrt5, (e - e**4) * inv_sqrt5],
        ]
    )
    return [s, t]


# -- SL3 series ----------------------------------------------------------


def _cycle3() -> GroupElement:
    return _m([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def delta_3n2(n: int) -> list[GroupElement]:
    """Delta(3n^2) = <diag(z, z^-1, 1), 3-cycle>, z = zeta_n; order 3n^2."""
    z = zeta(n)
    return [_m([[z, 0, 0], [0, z ** (n - 1), 0], [0, 0, 1]]), _cycle3()]


def delta_6n2(n: int) -> list[GroupElement]:
    """Delta(6n^2): Delta(3n^2) plus the negated coordinate swap."""
    swap = _m([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
    return delta_3n2(n) + [swap]


# -- SL3 exceptional groups ------------------------------------------------


def _fourier3() -> GroupElement:
    """(1/(w - w^2)) * Vandermonde(1, w, w^2); order 4, det 1."""
    w = zeta(3)
    # (w - w^2)^-1 = (w^2 - w)/3.
    c = (w**2 - w) * rat(Fraction(1, 3))
    return _m(
        [
            [c, c, c],
            [c, c * w, c * w**2],
            [c, c * w**2, c * w],
        ]
    )


def _quadratic_phase() -> GroupElement:
    """diag(zeta9, zeta9^4, zeta9^4); normalizes the order-27 monomial group."""
    e9 = zeta(9)
    return _m([[e9, 0, 0], [0, e9**4, 0], [0, 0, e9**4]])


def exceptional_e() -> list[GroupElement]:
    """Order 108 (type Sigma(36x3))."""
    w = zeta(3)
    s = _m([[1, 0, 0], [0, w, 0], [0, 0, w**2]])
    return [s, _cycle3(), _fourier3()]


def exceptional_f() -> list[GroupElement]:
    """Order 216 (type Sigma(72x3)); adds a conjugate Fourier generator."""
    u = _quadratic_phase()
    v = _fourier3()
    w = u * v * u.inverse()
    return exceptional_e() + [w]


def exceptional_g() -> list[GroupElement]:
    """Order 648 (the Hessian group, type Sigma(216x3))."""
    return exceptional_e() + [_quadratic_phase()]


def icosahedral_sl3() -> list[GroupElement]:
    """Order 60; the classical 3-dimensional icosahedral matrices."""
    e = zeta(5)
    s = e**2 + e**3
    t = e + e**4
    e1 = _m([[1, 0, 0], [0, e**4, 0], [0, 0, e]])
    e2 = _m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
    inv_sqrt5 = (rat(2) * e + rat(2) * e**4 + rat(1)) * rat(Fraction(1, 5))
    e3 = _m(
        [
            [inv_sqrt5, inv_sqrt5, inv_sqrt5],
            [rat(2) * inv_sqrt5, s * inv_sqrt5, t * inv_sqrt5],
            [rat(2) * inv_sqrt5, t * inv_sqrt5, s * inv_sqrt5],
        ]
    )
    return [e1, e2, e3]


def klein_sl3() -> list[GroupElement]:
    """Order 168 (simple group of Klein's quartic) over Q(zeta7)."""
    b = zeta(7)
    t = _m([[b**4, 0, 0], [0, b**2, 0], [0, 0, b]])
    # Normalization of the Gauss sum chosen so the circulant has det 1.
    h = (b + b**2 + b**4 - b**3 - b**5 - b**6) * rat(Fraction(1, 7))
    p = (b - b**6) * h
    q = (b**2 - b**5) * h
    r = (b**4 - b**3) * h
    rmat = _m([[p, q, r], [q, r, p], [r, p, q]])
    return [t, _cycle3(), rmat]


def scalar_omega() -> GroupElement:
    """The central scalar diag(w, w, w), w = zeta3."""
    w = zeta(3)
    return _m([[w, 0, 0], [0, w, 0], [0, 0, w]])


def icosahedral_times_center() -> list[GroupElement]:
    """Order 180."""
    return icosahedral_sl3() + [scalar_omega()]


def klein_times_center() -> list[GroupElement]:
    """Order 504."""
    return klein_sl3() + [scalar_omega()]


def valentiner() -> list[GroupElement]:
    """Order 1080 (triple cover of the alternating group on 6 letters).

    The icosahedral generators plus the classical extra matrix with
    cube-root-of-unity twists; the pair (w, w^2) is the one that closes
    to order 1080 with determinant 1.
    """
    e = zeta(5)
    w = zeta(3)
    s = (e**2 + e**3).lift(15)
    t = (e + e**4).lift(15)
    inv_sqrt5 = ((rat(2) * e + rat(2) * e**4 + rat(1)) * rat(Fraction(1, 5))).lift(15)
    l1 = w.lift(15)
    l2 = (w**2).lift(15)
    e4 = _m(
        [
            [inv_sqrt5, l1 * inv_sqrt5, l1 * inv_sqrt5],
            [rat(2) * l2 * inv_sqrt5, s * inv_sqrt5, t * inv_sqrt5],
            [rat(2) * l2 * inv_sqrt5, t * inv_sqrt5, s * inv_sqrt5],
        ]
    )
    return icosahedral_sl3() + [e4]
