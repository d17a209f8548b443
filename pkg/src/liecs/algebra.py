"""Lie algebras given by rational structure constants.

An algebra is stored sparsely: the bracket [e_i, e_j] is kept only for
i < j, so antisymmetry holds by construction and [e_i, e_i] = 0 is not a
representable input.  The Jacobi identity is *not* assumed; it is checked
by :func:`validate`, and every downstream computation expects a validated
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from .errors import InconsistencyError
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    as_rational,
    basis_vector,
    clear_denominators,
    is_zero_vector,
    zero_vector,
)

DESCENDING = "descending"
ASCENDING = "ascending"


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra over Q in a fixed basis.

    ``structure`` lists (i, j, coefficients) triples with i < j (0-based):
    [e_i, e_j] = sum_k coefficients[k] e_k.  Pairs with zero bracket are
    omitted.
    """

    dim: int
    structure: tuple[tuple[int, int, Vector], ...]

    def __post_init__(self) -> None:
        seen = set()
        for i, j, coeffs in self.structure:
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bracket pair ({i}, {j}) requires 0 <= i < j < dim")
            if len(coeffs) != self.dim:
                raise ValueError(f"bracket ({i}, {j}) has {len(coeffs)} coefficients")
            if (i, j) in seen:
                raise ValueError(f"duplicate bracket pair ({i}, {j})")
            seen.add((i, j))

    @staticmethod
    def from_brackets(
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object]],
        *,
        one_based: bool = True,
    ) -> LieAlgebra:
        """Build from a human-friendly table {(i, j): {k: coefficient}}.

        Indices are 1-based by default to match the interchange format.
        """
        shift = 1 if one_based else 0
        entries = []
        for (i, j), out in sorted(brackets.items()):
            i0, j0 = i - shift, j - shift
            coeffs = [Fraction(0)] * dim
            for k, c in out.items():
                k0 = k - shift
                if not 0 <= k0 < dim:
                    raise ValueError(f"output index {k} out of range in bracket ({i}, {j})")
                coeffs[k0] = as_rational(c)
            if any(c != 0 for c in coeffs):
                entries.append((i0, j0, tuple(coeffs)))
        return LieAlgebra(dim, tuple(entries))

    @cached_property
    def _pair_map(self) -> dict[tuple[int, int], Vector]:
        return {(i, j): coeffs for i, j, coeffs in self.structure}

    @cached_property
    def _sparse_structure(self) -> tuple[tuple[int, int, tuple[tuple[int, Fraction], ...]], ...]:
        return tuple(
            (i, j, tuple((k, c) for k, c in enumerate(coeffs) if c != 0))
            for i, j, coeffs in self.structure
        )

    @cached_property
    def _int_structure(self) -> tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]:
        """Structure constants scaled by one global positive integer.

        Used by direction-only computations (span of brackets), where a
        uniform rescaling of the bracket changes nothing.
        """
        from math import gcd

        lcm = 1
        for _, _, coeffs in self.structure:
            for c in coeffs:
                d = c.denominator
                if d != 1:
                    lcm = lcm * d // gcd(lcm, d)
        return tuple(
            (
                i,
                j,
                tuple(
                    (k, c.numerator * (lcm // c.denominator))
                    for k, c in enumerate(coeffs)
                    if c != 0
                ),
            )
            for i, j, coeffs in self.structure
        )

    def _bracket_int(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Integer bracket of cleared vectors; a positive multiple of [x, y]."""
        out = [0] * self.dim
        for i, j, sparse in self._int_structure:
            weight = x[i] * y[j] - x[j] * y[i]
            if weight:
                for k, c in sparse:
                    out[k] += weight * c
        return out

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any pair of basis indices (0-based)."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._pair_map.get((i, j), zero_vector(self.dim))
        coeffs = self._pair_map.get((j, i))
        if coeffs is None:
            return zero_vector(self.dim)
        return tuple(-c for c in coeffs)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("bracket arguments must have length equal to dim")
        out = [Fraction(0)] * self.dim
        for i, j, sparse in self._sparse_structure:
            weight = x[i] * y[j] - x[j] * y[i]
            if weight != 0:
                for k, c in sparse:
                    out[k] += weight * c
        return tuple(out)

    def right_bracket_matrix(self, i: int) -> Matrix:
        """Matrix of the map x -> [x, e_i]."""
        return self._right_bracket_matrices[i]

    @cached_property
    def _right_bracket_matrices(self) -> tuple[Matrix, ...]:
        out = []
        for i in range(self.dim):
            cols = [self.bracket_basis(k, i) for k in range(self.dim)]
            out.append(Matrix.from_rows(cols, cols=self.dim).transpose())
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self.structure


@dataclass(frozen=True)
class JacobiViolation:
    """A basis triple (1-based) whose Jacobi cyclic sum is nonzero."""

    triple: tuple[int, int, int]
    residual: Vector


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[JacobiViolation, ...]

    @property
    def first_violation(self) -> JacobiViolation | None:
        return self.violations[0] if self.violations else None


def validate(alg: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on every basis triple i < j < k.

    Antisymmetry needs no check: the storage format only admits
    antisymmetric brackets.  Violations are reported, not raised, so that
    callers can surface them in their own error channel.
    """
    violations = []
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = basis_vector(n, i), basis_vector(n, j), basis_vector(n, k)
                residual = add_vectors(
                    add_vectors(
                        alg.bracket(alg.bracket(ei, ej), ek),
                        alg.bracket(alg.bracket(ej, ek), ei),
                    ),
                    alg.bracket(alg.bracket(ek, ei), ej),
                )
                if not is_zero_vector(residual):
                    violations.append(JacobiViolation((i + 1, j + 1, k + 1), residual))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def bracket_subspaces(alg: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of [u, v] over basis vectors u of a and v of b.

    Bilinearity of the bracket makes basis pairs sufficient, so the result
    is the subspace [a, b].  Each generating row is computed over cleared
    integers; the per-row positive rescaling cannot change the span.
    """
    if a.ambient_dim != alg.dim or b.ambient_dim != alg.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    a_int = [clear_denominators(u) for u in a.basis_rows()]
    b_int = [clear_denominators(v) for v in b.basis_rows()]
    rows = [
        w for u in a_int for v in b_int if any(w := alg._bracket_int(u, v))
    ]
    return Subspace.from_rows(alg.dim, rows)


@dataclass(frozen=True)
class CentralSeries:
    """A classical central series, stored without the repeated stable term.

    ``stabilized_at`` is the first index j with term(j) = term(j+1); it is
    always the index of the last stored term.
    """

    kind: str
    terms: tuple[Subspace, ...]
    stabilized_at: int

    def term(self, j: int) -> Subspace:
        """Term at index j, extending constantly past stabilization."""
        return self.terms[min(j, self.stabilized_at)]

    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)


def _iterate_until_stable(first: Subspace, step, cap: int) -> tuple[Subspace, ...]:
    """Apply ``step`` until two consecutive terms agree.

    Monotone chains in dimension n stabilize within n steps; running past
    ``cap`` iterations therefore signals a broken step function.
    """
    terms = [first]
    for _ in range(cap):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return tuple(terms)
        terms.append(nxt)
    raise InconsistencyError("series failed to stabilize within the dimension bound")


@lru_cache(maxsize=128)
def descending_central_series(alg: LieAlgebra) -> CentralSeries:
    """c_0 = g, c_j = [g, c_{j-1}], computed until stabilization.

    Memoized: algebras are immutable and the series is re-requested by
    nearly every downstream check.
    """
    full = Subspace.full(alg.dim)
    terms = _iterate_until_stable(
        full, lambda prev: bracket_subspaces(alg, full, prev), alg.dim + 1
    )
    return CentralSeries(DESCENDING, terms, len(terms) - 1)


@lru_cache(maxsize=128)
def ascending_central_series(alg: LieAlgebra) -> CentralSeries:
    """c^0 = 0, c^j = {x : [x, g] ⊆ c^{j-1}}, computed until stabilization."""
    from .linalg import (
        int_row_times_matrix,
        membership_conditions,
        solve_membership_kernel_int,
    )

    n = alg.dim
    ad_flats = [
        clear_denominators(alg.right_bracket_matrix(i).entries) for i in range(n)
    ]

    def step(prev: Subspace) -> Subspace:
        conds = membership_conditions(prev)
        if conds.rows == 0:
            return Subspace.full(n)
        conds_int = [clear_denominators(conds.row(r)) for r in range(conds.rows)]
        rows = []
        for ad_flat in ad_flats:
            for c_row in conds_int:
                rows.append(int_row_times_matrix(c_row, ad_flat, n))
        return solve_membership_kernel_int(rows, n)

    terms = _iterate_until_stable(Subspace.zero(n), step, n + 1)
    return CentralSeries(ASCENDING, terms, len(terms) - 1)


def center(alg: LieAlgebra) -> Subspace:
    """The center {x : [x, g] = 0}; equals the first ascending term."""
    series = ascending_central_series(alg)
    return series.term(1)


def nilpotency_step(alg: LieAlgebra) -> int | None:
    """Least k with c_k = 0, or None when the descending series stops above 0."""
    series = descending_central_series(alg)
    if not series.terms[-1].is_zero():
        return None
    return series.stabilized_at


def change_of_basis(alg: LieAlgebra, p: Matrix) -> LieAlgebra:
    """The same bracket written in the coordinates y = p @ x.

    The transported bracket is p ∘ [ , ] ∘ (p⁻¹ × p⁻¹): with p = 2·I every
    structure constant halves, and round-tripping with p⁻¹ is the identity.
    Raises on a singular p.
    """
    if p.rows != alg.dim or p.cols != alg.dim:
        raise ValueError("change-of-basis matrix size does not match the algebra")
    p_inv = p.inverse()
    brackets = {}
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            value = p.matvec(alg.bracket(p_inv.column(i), p_inv.column(j)))
            if not is_zero_vector(value):
                brackets[(i, j)] = {k: value[k] for k in range(alg.dim) if value[k] != 0}
    return LieAlgebra.from_brackets(alg.dim, brackets, one_based=False)
