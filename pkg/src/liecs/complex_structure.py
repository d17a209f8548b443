"""Almost-complex structures and their integrability.

A complex structure candidate is a rational matrix J with J² = -I bound to
a specific algebra.  Integrability is the vanishing of the Nijenhuis
expression

    N(x, y) = [Jx, Jy] - [x, y] - J([Jx, y] + [x, Jy]),

which is bilinear and antisymmetric, so checking all basis pairs i < j
decides it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    basis_vector,
    image_subspace,
    is_positive_definite,
    is_zero_vector,
    sub_vectors,
    subspace_intersection,
)


@dataclass(frozen=True)
class ComplexStructure:
    """An almost-complex structure bound to its algebra."""

    algebra: LieAlgebra
    matrix: Matrix

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.matvec(v)

    def image(self, w: Subspace) -> Subspace:
        """The subspace J(w)."""
        return image_subspace(w, self.matrix)


def validate_almost_complex(alg: LieAlgebra, j: Matrix) -> ComplexStructure:
    """Bind J to the algebra after checking J² = -I exactly.

    Raises ValueError on odd dimension (no almost-complex structure exists)
    or when J² + I has a nonzero entry, naming the first offending entry.
    """
    if alg.dim % 2 != 0:
        raise ValueError(f"odd dimension {alg.dim}: no almost-complex structure exists")
    if j.rows != alg.dim or j.cols != alg.dim:
        raise ValueError(f"J must be {alg.dim}x{alg.dim}, got {j.rows}x{j.cols}")
    square_plus_identity = (j @ j) + Matrix.identity(alg.dim)
    for i in range(alg.dim):
        for k in range(alg.dim):
            value = square_plus_identity.at(i, k)
            if value != 0:
                raise ValueError(
                    f"J^2 != -I: entry ({i + 1}, {k + 1}) of J^2 + I equals {value}"
                )
    return ComplexStructure(alg, j)


def nijenhuis(cs: ComplexStructure, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    """Exact value of N(x, y) for the bound structure."""
    alg = cs.algebra
    jx = cs.apply(x)
    jy = cs.apply(y)
    mixed = add_vectors(alg.bracket(jx, y), alg.bracket(x, jy))
    return sub_vectors(
        sub_vectors(alg.bracket(jx, jy), alg.bracket(x, y)), cs.apply(mixed)
    )


@dataclass(frozen=True)
class IntegrabilityReport:
    """Outcome of the integrability check.

    ``witnesses`` holds (i, j, N(e_i, e_j)) for each basis pair (1-based)
    with nonzero Nijenhuis value; the structure is integrable iff it is
    empty.
    """

    integrable: bool
    witnesses: tuple[tuple[int, int, Vector], ...]


def is_integrable(cs: ComplexStructure) -> IntegrabilityReport:
    """Evaluate N on all basis pairs i < j."""
    n = cs.algebra.dim
    witnesses = []
    for i in range(n):
        for j in range(i + 1, n):
            value = nijenhuis(cs, basis_vector(n, i), basis_vector(n, j))
            if not is_zero_vector(value):
                witnesses.append((i + 1, j + 1, value))
    return IntegrabilityReport(integrable=not witnesses, witnesses=tuple(witnesses))


@dataclass(frozen=True)
class SpecialFlags:
    """Membership in the two classical special classes.

    abelian:      [Jx, Jy] = [x, y] for all x, y
    bi_invariant: J[x, y] = [Jx, y] for all x, y
    """

    abelian: bool
    bi_invariant: bool


def classify_special(cs: ComplexStructure) -> SpecialFlags:
    n = cs.algebra.dim
    alg = cs.algebra
    abelian = True
    bi_invariant = True
    for i in range(n):
        ei = basis_vector(n, i)
        jei = cs.apply(ei)
        for j in range(i + 1, n):
            ej = basis_vector(n, j)
            jej = cs.apply(ej)
            plain = alg.bracket(ei, ej)
            if abelian and alg.bracket(jei, jej) != plain:
                abelian = False
            if bi_invariant and cs.apply(plain) != alg.bracket(jei, ej):
                bi_invariant = False
            if not abelian and not bi_invariant:
                return SpecialFlags(False, False)
    return SpecialFlags(abelian, bi_invariant)


def j_invariant_inner_product(cs: ComplexStructure, phi: Matrix) -> Matrix:
    """Average an SPD form with its J-pullback: psi = phi + Jᵀ phi J.

    The result is SPD and exactly J-invariant (Jᵀ psi J = psi, a
    consequence of J² = -I).
    """
    n = cs.algebra.dim
    if phi.rows != n or phi.cols != n:
        raise ValueError("phi size does not match the algebra dimension")
    if not phi.is_symmetric() or not is_positive_definite(phi):
        raise ValueError("phi must be symmetric positive definite")
    jt = cs.matrix.transpose()
    return phi + (jt @ phi @ cs.matrix)


def largest_j_invariant_subspace(cs: ComplexStructure, w: Subspace) -> Subspace:
    """The largest J-invariant subspace of w, namely w ∩ J(w).

    J restricts to an automorphism of the result, which is therefore
    even-dimensional.
    """
    if w.ambient_dim != cs.algebra.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    return subspace_intersection(w, cs.image(w))
