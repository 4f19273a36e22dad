"""Truncated power series for self-maps of the unit disc.

Everything downstream works on one-variable slices g(t) = a0 + sum c_n t^n
of a map into the closed unit polydisc, restricted to a complex line through
the origin.  A slice of such a map is a Schur function: holomorphic on the
disc with |g| <= 1.  Two structural facts about Schur functions drive all
tail accounting:

* coefficient bound: |c_n| <= 1 - |a0|^2 for every n >= 1;
* Schwarz-Pick growth: |g(t)| <= (|a0| + r) / (1 + |a0| r) for |t| = r.

A ``TruncatedSeries`` stores the first N coefficients together with a
``schur_certified`` flag.  The flag is set only by constructions that
guarantee Schur-class membership (Moebius maps, the Schur-parameter
recursion below), and it is what licenses the geometric tail bounds of
:func:`tail_bound`: all discarded coefficients are bounded by
1 - |a0|^2, so every truncated functional evaluation can be promoted to a
rigorous two-sided enclosure of the untruncated value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import CertificationError, DomainError

#: Default truncation order used throughout the package.
DEFAULT_ORDER = 64

#: Slack allowed on the coefficient bound when validating certified series.
#: Well above double-precision accumulation error at the default order.
COEFF_SLACK = 1e-12


class BoundKind(enum.Enum):
    """Provenance of a tail bound."""

    #: Geometric majorant from the Schur coefficient bound |c_n| <= 1-|a0|^2.
    COEFFICIENT_GEOMETRIC = "coefficient_geometric"
    #: Exact geometric tail of a Moebius map's coefficient sequence.
    MOBIUS_EXACT = "mobius_exact"
    #: Caller-supplied bound.
    CUSTOM = "custom"


@dataclass(frozen=True)
class TailBudget:
    """Upper bound on the part of a functional term lost to truncation."""

    kind: BoundKind
    value: float

    def __post_init__(self) -> None:
        if not (self.value >= 0.0 and np.isfinite(self.value)):
            raise DomainError(f"tail budget must be finite and >= 0, got {self.value}")


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """First N + 1 Taylor coefficients a0, c_1, ..., c_N of a disc slice.

    Args:
        a0: constant term, |a0| <= 1.
        coeffs: coefficients c_1 ... c_N (N >= 1).
        schur_certified: set True only when the construction guarantees
            |g| <= 1 on the whole disc.  Certified series must satisfy the
            coefficient bound |c_n| <= 1 - |a0|^2; a violation is a bug in
            the construction, not data to be tolerated.
    """

    a0: complex
    coeffs: np.ndarray
    schur_certified: bool = False

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size < 1:
            raise DomainError("coeffs must be a nonempty 1-d sequence")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "a0", complex(self.a0))
        if abs(self.a0) > 1.0 + 1e-15:
            raise DomainError(f"|a0| = {abs(self.a0)} exceeds 1")
        if self.schur_certified:
            cap = 1.0 - abs(self.a0) ** 2
            worst = float(np.max(np.abs(arr)))
            if worst > cap + COEFF_SLACK:
                raise CertificationError(
                    f"certified series violates coefficient bound: "
                    f"max |c_n| = {worst} > 1 - |a0|^2 = {cap}"
                )

    @property
    def truncation_order(self) -> int:
        return int(self.coeffs.size)


MobiusSign = Literal["plus", "minus"]


def mobius_series(lam: float, sign: MobiusSign, n_terms: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expand a real-parameter disc automorphism as a truncated series.

    ``sign="plus"`` expands g(t) = (lam + t) / (1 + lam t), whose
    coefficients are c_n = (-1)^(n-1) lam^(n-1) (1 - lam^2);
    ``sign="minus"`` expands g(t) = (lam - t) / (1 - lam t), with
    c_n = -lam^(n-1) (1 - lam^2).  Both attain the coefficient bound
    at n = 1: |c_1| = 1 - lam^2.

    Args:
        lam: parameter in [0, 1).
        sign: "plus" or "minus".
        n_terms: truncation order N >= 1.
    """
    if not 0.0 <= lam < 1.0:
        raise DomainError(f"lambda must lie in [0, 1), got {lam}")
    if n_terms < 1:
        raise DomainError(f"truncation order must be >= 1, got {n_terms}")
    n = np.arange(n_terms)
    powers = lam**n  # lam^0 = 1 even at lam = 0
    if sign == "plus":
        coeffs = (1.0 - lam * lam) * powers * (-1.0) ** n
    elif sign == "minus":
        coeffs = -(1.0 - lam * lam) * powers
    else:
        raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return TruncatedSeries(a0=lam, coeffs=coeffs.astype(np.complex128), schur_certified=True)


def _truncated_quotient(num: np.ndarray, den: np.ndarray, n_terms: int) -> np.ndarray:
    """First n_terms + 1 coefficients of num/den, assuming den[0] = 1."""
    out = np.zeros(n_terms + 1, dtype=np.complex128)
    num = num[: n_terms + 1]
    for n in range(n_terms + 1):
        acc = num[n] if n < num.size else 0.0
        jmax = min(n, den.size - 1)
        if jmax >= 1:
            acc -= np.dot(den[1 : jmax + 1], out[n - 1 :: -1][:jmax])
        out[n] = acc
    return out


def schur_series_from_params(params: Sequence[complex], n_terms: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Synthesize a certified Schur function from its Schur parameters.

    The continued-fraction recursion

        f_j(t) = (g_j + t f_{j+1}(t)) / (1 + conj(g_j) t f_{j+1}(t))

    with the tail function f_{K+1} identically zero maps any parameter
    sequence g_0 ... g_K with |g_j| <= 1 to a Schur function, and every
    Schur function arises this way.  The all-zero sequence yields the zero
    function; the sequence (lam, 1) terminates at a unimodular parameter
    and reproduces the Moebius map (lam + t)/(1 + lam t) exactly.

    Internally the recursion is carried on numerator/denominator polynomial
    pairs (no intermediate divisions), followed by a single truncated
    quotient; the denominator's constant term is 1 by construction.

    Args:
        params: Schur parameters, each of modulus <= 1.
        n_terms: truncation order of the returned series.
    """
    if n_terms < 1:
        raise DomainError(f"truncation order must be >= 1, got {n_terms}")
    gams = np.asarray(params, dtype=np.complex128)
    if gams.ndim != 1 or gams.size < 1:
        raise DomainError("params must be a nonempty 1-d sequence")
    if np.any(np.abs(gams) > 1.0 + 1e-15):
        raise DomainError("Schur parameters must have modulus <= 1")

    width = n_terms + 1
    p = np.zeros(width, dtype=np.complex128)  # tail f = 0
    q = np.zeros(width, dtype=np.complex128)
    q[0] = 1.0
    for g in gams[::-1]:
        tp = np.zeros(width, dtype=np.complex128)
        tp[1:] = p[:-1]  # t * p, truncated
        p, q = g * q + tp, q + np.conj(g) * tp
    coeffs = _truncated_quotient(p, q, n_terms)
    return TruncatedSeries(a0=coeffs[0], coeffs=coeffs[1:], schur_certified=True)


def random_schur_series(seed: int, n_terms: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Draw a reproducible certified Schur-class series.

    Uses n_terms + 1 Schur parameters sampled uniformly from the closed
    unit disc with a seeded generator, so membership in the Schur class is
    guaranteed by construction rather than by rejection.
    """
    rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.uniform(0.0, 1.0, size=n_terms + 1))
    angle = rng.uniform(0.0, 2.0 * np.pi, size=n_terms + 1)
    params = radius * np.exp(1j * angle)
    return schur_series_from_params(params, n_terms)


def eval_series(s: TruncatedSeries, t: complex) -> complex:
    """Evaluate a0 + sum c_n t^n for |t| < 1."""
    if abs(t) >= 1.0:
        raise DomainError(f"|t| = {abs(t)} must be < 1")
    # Horner on the reversed coefficients, constant term last.
    acc = 0.0 + 0.0j
    for c in s.coeffs[::-1]:
        acc = acc * t + c
    return s.a0 + acc * t


def eval_series_many(s: TruncatedSeries, ts: np.ndarray) -> np.ndarray:
    """Vectorized :func:`eval_series` over an array of points, |t| < 1."""
    ts = np.asarray(ts, dtype=np.complex128)
    if np.any(np.abs(ts) >= 1.0):
        raise DomainError("all evaluation points must satisfy |t| < 1")
    acc = np.zeros_like(ts)
    for c in s.coeffs[::-1]:
        acc = acc * ts + c
    return s.a0 + acc * ts


TailTermKind = Literal["linear_sum", "square_sum", "modulus"]


def tail_bound(s: TruncatedSeries, r: float, term_kind: TailTermKind) -> TailBudget:
    """Bound the discarded tail of a functional term at radius r.

    For a certified series every coefficient beyond the truncation order is
    bounded by M = 1 - |a0|^2, so with N = truncation order:

    * ``linear_sum``: sum_{n>N} |c_n| r^n      <= M r^(N+1) / (1 - r)
    * ``square_sum``: sum_{n>N} |c_n|^2 r^(2n) <= M^2 r^(2N+2) / (1 - r^2)
    * ``modulus``:    |sum_{n>N} c_n t^n|      <= M r^(N+1) / (1 - r)

    Only certified series carry this guarantee; anything else raises.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    if not s.schur_certified:
        raise CertificationError("tail bounds require a Schur-certified series")
    m = 1.0 - abs(s.a0) ** 2
    n = s.truncation_order
    if term_kind in ("linear_sum", "modulus"):
        value = m * r ** (n + 1) / (1.0 - r)
    elif term_kind == "square_sum":
        value = m * m * r ** (2 * n + 2) / (1.0 - r * r)
    else:
        raise DomainError(f"unknown tail term kind {term_kind!r}")
    return TailBudget(kind=BoundKind.COEFFICIENT_GEOMETRIC, value=float(value))


def mobius_tail_exact(lam: float, r: float, n_terms: int) -> TailBudget:
    """Exact linear-sum tail of a Moebius series: geometric with ratio lam*r."""
    if not 0.0 <= lam < 1.0:
        raise DomainError(f"lambda must lie in [0, 1), got {lam}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    value = (1.0 - lam * lam) * lam**n_terms * r ** (n_terms + 1) / (1.0 - lam * r)
    return TailBudget(kind=BoundKind.MOBIUS_EXACT, value=float(value))
