"""Quaternions and the 2x2 quaternion-matrix representations of Cl(4,0).

Quaternions are stored as scalar + 3-vector, matching the bivector
embedding q = x0 + x1*e23 - x2*e13 + x3*e12 into Cl(4,0); the minus sign
on the e13 term is what makes q = x0 + i*x with i = e123, and it lives in
exactly one place (:func:`Quaternion.to_multivector`).

Two spectral bases turn Cl(4,0) into 2x2 matrices over the quaternions:
one built from the vector idempotents (1 +- e0)/2, one from the
pseudoscalar idempotents (1 +- e0123)/2.  Representations are computed by
linearity from precomputed basis-blade images; the inverse maps expand the
row-idempotent-matrix-column sandwich in the core algebra, which keeps the
two directions independent of each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import EUCLIDEAN4, Multivector, residual, reverse
from .errors import SignatureMismatch

_SQRT1_2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Quaternion:
    """q = s + i*v with i the unit pseudoscalar of the Pauli subalgebra."""

    s: float
    v: tuple[float, float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "v", tuple(float(x) for x in self.v))

    @staticmethod
    def zero() -> "Quaternion":
        return Quaternion(0.0, (0.0, 0.0, 0.0))

    @staticmethod
    def one() -> "Quaternion":
        return Quaternion(1.0, (0.0, 0.0, 0.0))

    @staticmethod
    def from_scalar(x: float) -> "Quaternion":
        return Quaternion(x, (0.0, 0.0, 0.0))

    @staticmethod
    def from_vector(v) -> "Quaternion":
        return Quaternion(0.0, tuple(v))

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.s, tuple(-x for x in self.v))

    def norm2(self) -> float:
        return self.s * self.s + sum(x * x for x in self.v)

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def scale(self, a: float) -> "Quaternion":
        return Quaternion(a * self.s, tuple(a * x for x in self.v))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.s + other.s, tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.s - other.s, tuple(a - b for a, b in zip(self.v, other.v)))

    def __neg__(self) -> "Quaternion":
        return self.scale(-1.0)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return quat_mul(self, other)

    def max_abs(self) -> float:
        return max(abs(self.s), *(abs(x) for x in self.v))

    def to_multivector(self) -> Multivector:
        """Embed into Cl(4,0) as x0 + x1*e23 - x2*e13 + x3*e12."""
        c = np.zeros(EUCLIDEAN4.dim)
        c[0] = self.s
        c[0b1100] = self.v[0]   # e23
        c[0b1010] = -self.v[1]  # e13
        c[0b0110] = self.v[2]   # e12
        return Multivector(EUCLIDEAN4, c)

    @staticmethod
    def from_multivector(m: Multivector, tol: float = 1e-12) -> "Quaternion":
        """Inverse of :meth:`to_multivector`; rejects non-quaternion parts."""
        if m.signature != EUCLIDEAN4:
            raise SignatureMismatch("quaternions live in Cl(4,0)")
        q = Quaternion(
            m.coefficient(0),
            (m.coefficient(0b1100), -m.coefficient(0b1010), m.coefficient(0b0110)),
        )
        if residual(q.to_multivector(), m) > tol:
            raise ValueError("multivector has parts outside the quaternion subalgebra")
        return q


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Quaternion product, agreeing with the Cl(4,0) geometric product of
    the embeddings.

    The embedded basis (e23, -e13, e12) is a left-handed triple, hence the
    minus sign on the cross term.
    """
    u = np.array(a.v)
    w = np.array(b.v)
    s = a.s * b.s - float(u @ w)
    vec = a.s * w + b.s * u - np.cross(u, w)
    return Quaternion(s, tuple(vec))


@dataclass(frozen=True)
class QuatMatrix2:
    """2x2 matrix over the quaternions (row-major pair of rows)."""

    rows: tuple[tuple[Quaternion, Quaternion], tuple[Quaternion, Quaternion]]

    @staticmethod
    def from_entries(m00, m01, m10, m11) -> "QuatMatrix2":
        return QuatMatrix2(((m00, m01), (m10, m11)))

    @staticmethod
    def identity() -> "QuatMatrix2":
        return QuatMatrix2.from_entries(
            Quaternion.one(), Quaternion.zero(), Quaternion.zero(), Quaternion.one()
        )

    @staticmethod
    def zero() -> "QuatMatrix2":
        z = Quaternion.zero()
        return QuatMatrix2.from_entries(z, z, z, z)

    def entry(self, j: int, k: int) -> Quaternion:
        return self.rows[j][k]

    def __add__(self, other: "QuatMatrix2") -> "QuatMatrix2":
        return QuatMatrix2(
            tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "QuatMatrix2") -> "QuatMatrix2":
        return QuatMatrix2(
            tuple(
                tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def scale(self, a: float) -> "QuatMatrix2":
        return QuatMatrix2(tuple(tuple(q.scale(a) for q in row) for row in self.rows))

    def __mul__(self, other: "QuatMatrix2") -> "QuatMatrix2":
        # Row into column; quaternion factors multiply left-to-right since
        # they do not commute.
        def cell(j: int, k: int) -> Quaternion:
            return quat_mul(self.rows[j][0], other.rows[0][k]) + quat_mul(
                self.rows[j][1], other.rows[1][k]
            )

        return QuatMatrix2.from_entries(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))

    def conjugate_transpose(self) -> "QuatMatrix2":
        r = self.rows
        return QuatMatrix2.from_entries(
            r[0][0].conjugate(), r[1][0].conjugate(),
            r[0][1].conjugate(), r[1][1].conjugate(),
        )

    def max_abs(self) -> float:
        return max(q.max_abs() for row in self.rows for q in row)


def matrix_residual(a: QuatMatrix2, b: QuatMatrix2) -> float:
    return (a - b).max_abs()


# --------------------------------------------------------------------------
# Generator images and blade-image tables.

def _unit(k: int) -> Quaternion:
    v = [0.0, 0.0, 0.0]
    v[k] = 1.0
    return Quaternion(0.0, tuple(v))


def _generator_images_vec() -> list[QuatMatrix2]:
    z = Quaternion.zero()
    one = Quaternion.one()
    mats = [
        QuatMatrix2.from_entries(one, z, z, -one)  # e0
    ]
    for k in range(3):
        q = _unit(k)
        mats.append(QuatMatrix2.from_entries(z, q, -q, z))  # ek -> [[0, i ek],[-i ek, 0]]
    return mats


def _generator_images_pss() -> list[QuatMatrix2]:
    z = Quaternion.zero()
    one = Quaternion.one()
    mats = [
        QuatMatrix2.from_entries(z, one, one, z)  # e0
    ]
    for k in range(3):
        q = _unit(k)
        mats.append(QuatMatrix2.from_entries(z, q, -q, z))
    return mats


@lru_cache(maxsize=None)
def _blade_images(basis: str) -> tuple[QuatMatrix2, ...]:
    gens = _generator_images_vec() if basis == "vec" else _generator_images_pss()
    images = []
    for mask in range(EUCLIDEAN4.dim):
        img = QuatMatrix2.identity()
        for k in range(4):
            if mask >> k & 1:
                img = img * gens[k]
        images.append(img)
    return tuple(images)


def _rep(g: Multivector, basis: str) -> QuatMatrix2:
    if g.signature != EUCLIDEAN4:
        raise SignatureMismatch("representation defined on Cl(4,0)")
    images = _blade_images(basis)
    out = QuatMatrix2.zero()
    for mask in np.nonzero(g.coeffs)[0]:
        out = out + images[mask].scale(float(g.coeffs[mask]))
    return out


def rep_vec(g: Multivector) -> QuatMatrix2:
    """Matrix of g over the spectral basis built from (1 +- e0)/2."""
    return _rep(g, "vec")


def rep_pss(g: Multivector) -> QuatMatrix2:
    """Matrix of g over the spectral basis built from (1 +- e0123)/2."""
    return _rep(g, "pss")


# --------------------------------------------------------------------------
# Inverse maps: expand the row-idempotent-matrix-column sandwich in ga-core.

def _i_mv() -> Multivector:
    return Multivector.blade(EUCLIDEAN4, 0b1110)  # e123


def _I_mv() -> Multivector:
    return Multivector.blade(EUCLIDEAN4, 0b1111)  # e0123


def _e0_mv() -> Multivector:
    return Multivector.basis(EUCLIDEAN4, 0)


def _half(x: Multivector) -> Multivector:
    return x * 0.5


def idempotent_vec(sign: int) -> Multivector:
    """(1 + sign*e0)/2."""
    return _half(Multivector.scalar(EUCLIDEAN4, 1.0) + float(sign) * _e0_mv())


def idempotent_pss(sign: int) -> Multivector:
    """(1 + sign*e0123)/2."""
    return _half(Multivector.scalar(EUCLIDEAN4, 1.0) + float(sign) * _I_mv())


def idempotent_i(sign: int) -> Multivector:
    """(1 + sign*e123)/2."""
    return _half(Multivector.scalar(EUCLIDEAN4, 1.0) + float(sign) * _i_mv())


def _sandwich(M: QuatMatrix2, row, idem: Multivector, col) -> Multivector:
    out = Multivector.zero(EUCLIDEAN4)
    for j in range(2):
        for k in range(2):
            term = row[j] * idem * M.entry(j, k).to_multivector() * col[k]
            out = out + term
    return out


def unrep_vec(M: QuatMatrix2) -> Multivector:
    """g = (1  i) e+ [g] (1; -i), expanded in the core algebra."""
    one = Multivector.scalar(EUCLIDEAN4, 1.0)
    return _sandwich(M, (one, _i_mv()), idempotent_vec(+1), (one, -_i_mv()))


def unrep_pss(M: QuatMatrix2) -> Multivector:
    """g = (1  e0) I+ [g] (1; e0), expanded in the core algebra."""
    one = Multivector.scalar(EUCLIDEAN4, 1.0)
    return _sandwich(M, (one, _e0_mv()), idempotent_pss(+1), (one, _e0_mv()))


# --------------------------------------------------------------------------
# Change of basis between the two representations.

def basis_change_matrix() -> QuatMatrix2:
    """A = (1/sqrt2) [[1, 1], [-1, 1]]; unitary, A Astar = 1."""
    a = Quaternion.from_scalar(_SQRT1_2)
    return QuatMatrix2.from_entries(a, a, -a, a)


def change_of_basis(M_pss: QuatMatrix2) -> QuatMatrix2:
    """Conjugate a pseudoscalar-basis matrix into the vector basis."""
    A = basis_change_matrix()
    A_inv = A.conjugate_transpose()
    return A * M_pss * A_inv


def singular_change_matrix() -> tuple[tuple[Multivector, ...], ...]:
    """B = (sqrt2/2) [[i+, i-], [-i-, i+]] with multivector entries.

    The entries are idempotent halves of 1 +- e123, which are not
    quaternions, so B is kept at the multivector level.
    """
    s = _SQRT1_2
    ip = idempotent_i(+1)
    im = idempotent_i(-1)
    return (
        (ip * s, im * s),
        ((-1.0 * im) * s, ip * s),
    )


def _mv_matmul(a, b):
    return tuple(
        tuple(
            a[j][0] * b[0][k] + a[j][1] * b[1][k] for k in range(2)
        )
        for j in range(2)
    )


def _mv_star(a):
    """Reverse-conjugate transpose of a 2x2 multivector matrix."""
    return tuple(tuple(reverse(a[k][j]) for k in range(2)) for j in range(2))


def spectral_basis_vec() -> tuple[tuple[Multivector, ...], ...]:
    """[[e+, -i e-], [i e+, e-]]."""
    i = _i_mv()
    ep, em = idempotent_vec(+1), idempotent_vec(-1)
    return ((ep, -1.0 * (i * em)), (i * ep, em))


def spectral_basis_pss() -> tuple[tuple[Multivector, ...], ...]:
    """[[I+, e0 I-], [e0 I+, I-]]."""
    e0 = _e0_mv()
    Ip, Im = idempotent_pss(+1), idempotent_pss(-1)
    return ((Ip, e0 * Im), (e0 * Ip, Im))


def idempotent_identities() -> dict[str, float]:
    """Residuals of the closed relations tying the two spectral bases.

    All products are evaluated in the core algebra; every residual should
    vanish (coefficients are dyadic rationals, so floats are exact).
    """
    ip, im = idempotent_i(+1), idempotent_i(-1)
    ep = idempotent_vec(+1)
    Ip = idempotent_pss(+1)

    r_pss = residual(Ip, 2.0 * (im * ep * ip))
    r_vec = residual(ep, 2.0 * (ip * Ip * im))

    lhs = spectral_basis_vec()
    B = singular_change_matrix()
    rhs = _mv_matmul(_mv_matmul(B, spectral_basis_pss()), _mv_star(B))
    r_eq = max(residual(lhs[j][k], rhs[j][k]) for j in range(2) for k in range(2))

    # Outer-product form 2 (i+; -i-) I+ (i-, -i+) of the same relation.
    col = (ip, -1.0 * im)
    row = (im, -1.0 * ip)
    outer = tuple(
        tuple(2.0 * (col[j] * Ip * row[k]) for k in range(2)) for j in range(2)
    )
    r_outer = max(residual(lhs[j][k], outer[j][k]) for j in range(2) for k in range(2))

    # B has no two-sided inverse: B Bstar stays away from the identity.
    bbstar = _mv_matmul(B, _mv_star(B))
    one = Multivector.scalar(EUCLIDEAN4, 1.0)
    zero = Multivector.zero(EUCLIDEAN4)
    ident = ((one, zero), (zero, one))
    b_dev = max(residual(bbstar[j][k], ident[j][k]) for j in range(2) for k in range(2))

    return {
        "pseudoscalar_idempotent_from_vec": r_pss,
        "vec_idempotent_from_pseudoscalar": r_vec,
        "spectral_basis_relation": r_eq,
        "spectral_basis_outer_form": r_outer,
        "b_times_b_star_max_deviation": b_dev,
    }
