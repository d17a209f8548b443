"""Search for integrable complex structures.

The only exact-arithmetic promise in this module is the gate at the end:
whatever the floating-point machinery proposes is reconstructed as a
rational matrix and re-verified exactly (J² = -I and vanishing Nijenhuis
tensor) before it is allowed out.  A candidate that cannot be verified is
discarded, never returned.

Candidates are parametrized as J = P J0 P⁻¹ with J0 the standard block
structure, so J² = -I holds identically and the search space is invertible
matrices P.  Each restart draws a rational P, first checks the conjugated
structure exactly (this finds e.g. the standard structure immediately),
then minimizes the squared Nijenhuis norm in floats and tries to snap the
optimum back to small-denominator rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .algebra import LieAlgebra
from .catalog import standard_block_j
from .complex_structure import ComplexStructure, is_integrable, validate_almost_complex
from .linalg import Matrix

DEFAULT_RESTARTS = 100
DEFAULT_THRESHOLD = 1e-10
DEFAULT_DENOMINATOR_CAP = 10**6


def _verify_candidate(alg: LieAlgebra, j: Matrix) -> ComplexStructure | None:
    """The exactness gate: returns a bound structure only on exact success."""
    try:
        cs = validate_almost_complex(alg, j)
    except ValueError:
        return None
    if not is_integrable(cs).integrable:
        return None
    return cs


def _dense_structure_tensor(alg: LieAlgebra) -> np.ndarray:
    c = np.zeros((alg.dim, alg.dim, alg.dim))
    for i, j, coeffs in alg.structure:
        vec = np.array([float(x) for x in coeffs])
        c[i, j] = vec
        c[j, i] = -vec
    return c


def _nijenhuis_residual(c: np.ndarray, j: np.ndarray) -> float:
    """Sum of squared Nijenhuis values over basis pairs, in floats."""
    n = j.shape[0]
    bracket = lambda x, y: np.einsum("ijk,i,j->k", c, x, y)
    total = 0.0
    eye = np.eye(n)
    for a in range(n):
        ja = j @ eye[a]
        for b in range(a + 1, n):
            jb = j @ eye[b]
            value = (
                bracket(ja, jb)
                - bracket(eye[a], eye[b])
                - j @ (bracket(ja, eye[b]) + bracket(eye[a], jb))
            )
            total += float(value @ value)
    return total


def _random_rational_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        rows = [
            [Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))) for _ in range(n)]
            for _ in range(n)
        ]
        m = Matrix.from_rows(rows)
        if m.det() != 0:
            return m


def _snap_caps(den_cap: int):
    cap = 1
    while cap < den_cap:
        yield cap
        cap *= 4
    yield den_cap


def _snap_matrix(values: np.ndarray, n: int, cap: int) -> Matrix | None:
    rows = [
        [Fraction(values[r * n + col]).limit_denominator(cap) for col in range(n)]
        for r in range(n)
    ]
    m = Matrix.from_rows(rows)
    if m.det() == 0:
        return None
    return m


def find_complex_structure(
    alg: LieAlgebra,
    seed: int = 0,
    budget: int = DEFAULT_RESTARTS,
    *,
    threshold: float = DEFAULT_THRESHOLD,
    den_cap: int = DEFAULT_DENOMINATOR_CAP,
) -> ComplexStructure | None:
    """Search for an exactly integrable complex structure on ``alg``.

    ``budget`` counts random restarts; the trajectory is a deterministic
    function of ``seed``.  Returns None when the budget is exhausted or no
    float optimum survives rational reconstruction; both are ordinary
    outcomes, not errors.  Raises ValueError on odd dimension, where no
    almost-complex structure exists at all.
    """
    if alg.dim % 2 != 0:
        raise ValueError(f"odd dimension {alg.dim}: no almost-complex structure exists")
    from scipy.optimize import minimize  # deferred: keeps CLI start-up light

    n = alg.dim
    j0 = standard_block_j(n)
    rng = random.Random(seed)
    c_tensor = _dense_structure_tensor(alg)
    j0_float = np.array([[float(x) for x in j0.row(r)] for r in range(n)])

    def residual_from_flat(flat: np.ndarray) -> float:
        p = flat.reshape(n, n)
        sign, logdet = np.linalg.slogdet(p)
        if sign == 0 or logdet < -16.0:
            return 1e6
        j = p @ j0_float @ np.linalg.inv(p)
        return _nijenhuis_residual(c_tensor, j)

    for restart in range(budget):
        p_exact = Matrix.identity(n) if restart == 0 else _random_rational_invertible(rng, n)
        candidate = p_exact @ j0 @ p_exact.inverse()
        cs = _verify_candidate(alg, candidate)
        if cs is not None:
            return cs

        start = np.array([float(x) for x in p_exact.entries])
        result = minimize(residual_from_flat, start, method="BFGS", options={"maxiter": 200})
        if result.fun >= threshold:
            continue
        for cap in _snap_caps(den_cap):
            p_hat = _snap_matrix(result.x, n, cap)
            if p_hat is None:
                continue
            cs = _verify_candidate(alg, p_hat @ j0 @ p_hat.inverse())
            if cs is not None:
                return cs
    return None
