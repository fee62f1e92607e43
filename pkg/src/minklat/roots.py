"""Floating root finding with exact cross-checks.

Roots come from a simultaneous Aberth iteration in double precision, polished
with extended-precision Newton steps at high degree.  The real/complex split
is never trusted on its own: the count of real roots must match the exact
Sturm count or construction fails.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

from .constants import ERDOS_TURAN_DEFAULT
from .intpoly import IntPolynomial, multinacci, sturm_real_count

MAX_ABERTH_ITERATIONS = 600
RESIDUAL_FACTOR = 1e-10
REAL_CLASSIFY_FACTOR = 1e-8
UNIT_CIRCLE_GUARD = 1e-9
POLISH_DEGREE_THRESHOLD = 100


class RootFindingError(RuntimeError):
    pass


class SignatureError(RuntimeError):
    pass


class InconclusiveError(RuntimeError):
    """A floating comparison fell inside its guard band; no verdict."""


@dataclass(frozen=True)
class ConjugateSet:
    """Certified roots of a monic irreducible polynomial.

    real_roots is sorted ascending; complex_reps holds one member per
    conjugate pair, imaginary part positive.
    """

    polynomial: IntPolynomial
    real_roots: Tuple[float, ...]
    complex_reps: Tuple[complex, ...]
    s: int
    t: int
    max_residual: float

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def signature(self) -> Tuple[int, int]:
        return (self.s, self.t)

    def all_roots(self) -> List[complex]:
        """Full root multiset: real roots, then each pair and its conjugate."""
        out: List[complex] = [complex(r, 0.0) for r in self.real_roots]
        for z in self.complex_reps:
            out.append(z)
            out.append(z.conjugate())
        return out

    def to_json_dict(self) -> dict:
        return {
            "polynomial": list(self.polynomial.coefficients),
            "real_roots": list(self.real_roots),
            "complex_representatives": [[z.real, z.imag] for z in self.complex_reps],
            "s": self.s,
            "t": self.t,
            "max_residual": self.max_residual,
        }


def _horner_many(coeffs: Sequence[float], z: np.ndarray):
    """Evaluate p and p' at every z (coeffs constant term first)."""
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs: Sequence[int]) -> np.ndarray:
    """All roots of the polynomial by Aberth-Ehrlich iteration.

    Deterministic start: a circle of radius max(|a0/an|^(1/n), 1/2) with a
    slight spiral so no starting point is real or conjugate-symmetric.
    """
    n = len(coeffs) - 1
    an = coeffs[-1]
    a0 = coeffs[0]
    radius = max(abs(a0 / an) ** (1.0 / n), 0.5) if a0 else 0.5
    k = np.arange(n)
    angles = 2.0 * np.pi * k / n + 0.7 / n + 0.3
    radii = radius * (1.0 + 0.05 * k / n)
    z = radii * np.exp(1j * angles)
    cf = [float(c) for c in coeffs]
    for _ in range(MAX_ABERTH_ITERATIONS):
        p, dp = _horner_many(cf, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            w = newton / (1.0 - newton * s)
        w = np.nan_to_num(w, nan=0.0, posinf=0.0, neginf=0.0)
        z = z - w
        if np.max(np.abs(w) / (1.0 + np.abs(z))) < 1e-14:
            return z
    raise RootFindingError("root finding failed")


def _polish(coeffs: Sequence[int], roots: np.ndarray) -> np.ndarray:
    """Extended-precision Newton pass; rescues the last digits at high degree."""
    out = []
    with mpmath.workdps(40):
        cs = [mpmath.mpf(int(c)) for c in coeffs]
        for z0 in roots:
            z = mpmath.mpc(complex(z0))
            for _ in range(4):
                p = mpmath.mpc(0)
                dp = mpmath.mpc(0)
                for c in reversed(cs):
                    dp = dp * z + p
                    p = p * z + c
                if dp == 0:
                    break
                step = p / dp
                z = z - step
                if abs(step) < mpmath.mpf("1e-25") * (1 + abs(z)):
                    break
            out.append(complex(z))
    return np.array(out, dtype=complex)


def _log_residual_ok(coeffs: Sequence[int], roots: np.ndarray) -> Tuple[bool, float]:
    """Check |f(z)| <= RESIDUAL_FACTOR*(1+|z|)^n*l1 in log space; return max |f|."""
    n = len(coeffs) - 1
    l1 = float(sum(abs(c) for c in coeffs))
    cf = [float(c) for c in coeffs]
    p, _ = _horner_many(cf, np.asarray(roots, dtype=complex))
    absp = np.abs(p)
    with np.errstate(divide="ignore"):
        lhs = np.log(absp)
    rhs = math.log(RESIDUAL_FACTOR) + n * np.log1p(np.abs(roots)) + math.log(l1)
    return bool(np.all(lhs <= rhs)), float(np.max(absp))


def _locate_roots(p: IntPolynomial, polish: Optional[bool] = None) -> np.ndarray:
    """Raw root multiset for any polynomial with a nonzero leading coefficient.

    No irreducibility or squarefreeness requirement; used for sector counting
    where only the arguments matter.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    roots = _aberth(p.coefficients)
    if polish is None:
        polish = p.degree > POLISH_DEGREE_THRESHOLD
    if polish:
        roots = _polish(p.coefficients, roots)
    return roots


@lru_cache(maxsize=512)
def _find_roots_cached(coeffs: Tuple[int, ...]) -> ConjugateSet:
    p = IntPolynomial(coeffs)
    roots = _locate_roots(p)
    ok, max_resid = _log_residual_ok(coeffs, roots)
    if not ok:
        # one more polish round before giving up
        roots = _polish(coeffs, roots)
        ok, max_resid = _log_residual_ok(coeffs, roots)
        if not ok:
            raise RootFindingError("root finding failed")

    reals = []
    complexes = []
    for z in roots:
        if abs(z.imag) < REAL_CLASSIFY_FACTOR * (1.0 + abs(z)):
            reals.append(z.real)
        elif z.imag > 0:
            complexes.append(complex(z))
    s = len(reals)
    t = len(complexes)
    if s + 2 * t != p.degree:
        raise SignatureError("signature classification failed")
    exact_s = sturm_real_count(p)
    if exact_s != s:
        raise SignatureError("signature classification failed")
    return ConjugateSet(
        polynomial=p,
        real_roots=tuple(float(r) for r in sorted(reals)),
        complex_reps=tuple(sorted(complexes, key=lambda z: (z.real, z.imag))),
        s=s,
        t=t,
        max_residual=max_resid,
    )


def find_roots(p: IntPolynomial) -> ConjugateSet:
    """Certified ConjugateSet of a monic squarefree polynomial.

    Irreducibility is the caller's promise (families carry proofs, the search
    filters first); monicity, convergence, residual bound and the Sturm
    signature cross-check are all enforced here.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if not p.is_monic:
        raise ValueError("monic polynomial required")
    return _find_roots_cached(p.coefficients)


# -- sector counting -----------------------------------------------------------

def _argument(z: complex) -> float:
    a = cmath.phase(z)
    if a < 0:
        a += 2.0 * math.pi
    if a >= 2.0 * math.pi:
        a = 0.0
    return a


def sector_count(
    roots: Union[ConjugateSet, Sequence[complex]],
    phi: float,
    psi: float,
) -> int:
    """Number of roots with argument in [phi, psi), arguments taken in [0, 2pi)."""
    if not (0.0 <= phi < psi <= 2.0 * math.pi + 1e-15):
        raise ValueError(f"invalid sector [{phi}, {psi})")
    if isinstance(roots, ConjugateSet):
        pool = roots.all_roots()
    else:
        pool = list(roots)
    return sum(1 for z in pool if phi <= _argument(z) < psi)


@dataclass(frozen=True)
class SectorBoundResult:
    lhs: float
    rhs: float
    holds: bool
    sector_roots: int
    degree: int


def erdos_turan_check(
    p: IntPolynomial,
    phi: float,
    psi: float,
    constant: float = ERDOS_TURAN_DEFAULT,
) -> SectorBoundResult:
    """Discrepancy bound for root arguments over one sector.

    lhs = |N(phi,psi) - (psi-phi)/(2pi) * d|
    rhs = constant * sqrt(d * log(L / sqrt(|a_d * a_0|))), L = sum |a_i|.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if p.constant_term == 0 or p.leading_coefficient == 0:
        raise ValueError("nonzero constant and leading coefficients required")
    d = p.degree
    roots = _locate_roots(p, polish=False)
    n_sector = sector_count(list(roots), phi, psi)
    lhs = abs(n_sector - (psi - phi) / (2.0 * math.pi) * d)
    length = float(sum(abs(c) for c in p.coefficients))
    ends = abs(p.leading_coefficient * p.constant_term)
    rhs = constant * math.sqrt(d * math.log(length / math.sqrt(ends)))
    return SectorBoundResult(
        lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs), sector_roots=n_sector, degree=d
    )


# -- Pisot and family location checks -------------------------------------------

def pisot_check(roots: ConjugateSet) -> bool:
    """True iff the set belongs to a Pisot number: one real root > 1, every
    other conjugate strictly inside the unit circle.

    Any modulus within UNIT_CIRCLE_GUARD of 1 is refused rather than guessed.
    """
    moduli = [abs(z) for z in roots.all_roots()]
    for m in moduli:
        if abs(m - 1.0) < UNIT_CIRCLE_GUARD:
            raise InconclusiveError("inconclusive at tolerance")
    outside = [m for m in moduli if m > 1.0]
    if len(outside) != 1:
        return False
    dominant_real = [r for r in roots.real_roots if abs(r) > 1.0]
    if len(dominant_real) != 1:
        return False
    return dominant_real[0] > 1.0


@dataclass(frozen=True)
class MultinacciLocation:
    """Per-clause verdicts for the root layout of multinacci(n)."""

    n: int
    dominant_in_window: bool
    second_real_ok: bool
    annulus_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.dominant_in_window and self.second_real_ok and self.annulus_ok


def multinacci_location_check(n: int) -> MultinacciLocation:
    """Verify the dominant root sits in (2n/(n+1), 2), the second real root
    exists iff n is even and then lies in (-1, -3^(-1/n)), and every other
    conjugate has modulus strictly inside (3^(-1/n), 1).

    The dominant window is certified with exact Sturm counts; beyond degree
    50 the dominant root is closer to 2 than one double-precision ulp, so a
    floating comparison against 2 would be vacuous.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    p = multinacci(n)
    cs = find_roots(p)

    in_window = sturm_real_count(p, (Fraction(2 * n, n + 1), Fraction(2)))
    above = sturm_real_count(p, (Fraction(2), None))
    dominant_in_window = in_window == 1 and above == 0

    lower = -1.0
    upper = -(3.0 ** (-1.0 / n))
    others = [r for r in cs.real_roots if r < 1.0]
    if n % 2 == 0:
        second_real_ok = (
            cs.s == 2
            and len(others) == 1
            and lower + UNIT_CIRCLE_GUARD < others[0] < upper - UNIT_CIRCLE_GUARD
        )
    else:
        second_real_ok = cs.s == 1 and not others

    inner = 3.0 ** (-1.0 / n)
    annulus_ok = all(
        inner + UNIT_CIRCLE_GUARD < abs(z) < 1.0 - UNIT_CIRCLE_GUARD
        for z in cs.complex_reps
    )
    return MultinacciLocation(
        n=n,
        dominant_in_window=dominant_in_window,
        second_real_ok=second_real_ok,
        annulus_ok=annulus_ok,
    )
