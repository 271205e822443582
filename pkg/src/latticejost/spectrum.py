"""Root finding and spectral classification of the Jost polynomial.

Roots are located by balanced companion-matrix eigenvalues, polished by
Newton steps, merged into multiplicity clusters, and then binned by the
interval scheme: bound states in (-1,0) and (0,1), real resonances beyond
+-1, exceptional zeros at +-1, and complex pairs outside the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import NumericConfig, Potential
from .errors import (
    CountMismatchError,
    DegenerateDegreeError,
    NotABoundStateError,
    UnitCircleViolationError,
)
from .jost import (
    JostPolynomial,
    jost_eval,
    jost_eval_derivative,
    jost_eval_recursive_grid,
    jost_eval_recursive_pair,
)

__all__ = [
    "ClassifiedZero",
    "ZeroLedger",
    "BoundState",
    "SignRecord",
    "find_zeros",
    "classify_zeros",
    "norming_constants",
    "sign_diagnostics",
    "bound_state_scan",
]

BOUND_NEG = "BoundNeg"
BOUND_POS = "BoundPos"
RES_LEFT = "ResonanceLeft"
RES_RIGHT = "ResonanceRight"
EDGE_MINUS = "EdgeMinus"
EDGE_PLUS = "EdgePlus"
COMPLEX_PAIR = "ComplexPair"


# ---------------------------------------------------------------------------
# root finding


def _newton_polish(coeffs: Sequence[float], z: complex, steps: int = 12) -> complex:
    """Horner-Newton refinement; a step is kept only if |f| does not grow."""
    fz = abs(jost_eval(coeffs, z))
    for _ in range(steps):
        dp = jost_eval_derivative(coeffs, z)
        if dp == 0:
            break
        step = jost_eval(coeffs, z) / dp
        cand = z - step
        fc = abs(jost_eval(coeffs, cand))
        if fc >= fz:
            break
        z, fz = cand, fc
        if abs(step) < 1e-16 * max(1.0, abs(z)):
            break
    return z


def _cluster(roots: list[complex], tol: float) -> list[tuple[complex, int]]:
    """Greedy union-find merge of roots closer than tol; centroid + count."""
    n = len(roots)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[complex]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    out = []
    for members in groups.values():
        centroid = sum(members) / len(members)
        out.append((centroid, len(members)))
    return out


def _aberth(coeffs_exact: Sequence, seeds: list[complex], dps: int = 50, maxit: int = 120):
    """Simultaneous Aberth-Ehrlich refinement at working precision dps."""
    from mpmath import mp, mpc, mpf

    with mp.workdps(dps):
        coeffs = [mp.mpmathify(c) for c in coeffs_exact]
        dcoeffs = [j * coeffs[j] for j in range(1, len(coeffs))]

        def horner(cs, z):
            acc = mpc(0)
            for a in reversed(cs):
                acc = acc * z + a
            return acc

        # tiny deterministic shear so that coincident double seeds separate
        roots = [mpc(z) + mpc(1, 1) * mpf(10) ** (-14) * (k + 1) for k, z in enumerate(seeds)]
        tol = mpf(10) ** (-(dps - 8))
        for _ in range(maxit):
            maxcorr = mpf(0)
            new = []
            for k, zk in enumerate(roots):
                pv = horner(coeffs, zk)
                dv = horner(dcoeffs, zk)
                if dv == 0:
                    new.append(zk)
                    continue
                ratio = pv / dv
                ssum = sum(1 / (zk - zj) for j, zj in enumerate(roots) if j != k)
                denom = 1 - ratio * ssum
                corr = ratio if denom == 0 else ratio / denom
                maxcorr = max(maxcorr, abs(corr))
                new.append(zk - corr)
            roots = new
            if maxcorr < tol:
                break
        return [complex(r) for r in roots]


def find_zeros(p: JostPolynomial, cfg: NumericConfig) -> list[tuple[complex, int]]:
    """All roots of the Jost polynomial, clustered by multiplicity.

    Returns (root, multiplicity) pairs; multiplicities sum to the degree.
    Real-coefficient conjugate symmetry is enforced explicitly after the
    Newton polish.
    """
    degree = p.degree
    if degree == 0:
        return []
    if p.coeffs[-1] == 0.0:
        raise DegenerateDegreeError("leading Jost coefficient is zero")

    raw = np.polynomial.polynomial.polyroots(np.asarray(p.coeffs, dtype=float))
    polished: list[complex] = []
    handled = np.zeros(len(raw), dtype=bool)
    for i, z in enumerate(raw):
        if handled[i]:
            continue
        handled[i] = True
        z = complex(z)
        if abs(z.imag) < cfg.tau_real:
            zr = _newton_polish(p.coeffs, complex(z.real))
            if abs(zr.imag) < cfg.tau_real:
                zr = complex(zr.real)
            polished.append(zr)
            continue
        # polish one member of the conjugate pair, mirror the other
        mate = None
        for j in range(i + 1, len(raw)):
            if not handled[j] and abs(complex(raw[j]) - z.conjugate()) < 1e-8 * max(1.0, abs(z)):
                mate = j
                break
        zr = _newton_polish(p.coeffs, z)
        if abs(zr.imag) < cfg.tau_real:
            zr = complex(zr.real)
            polished.append(zr)
            if mate is not None:
                handled[mate] = True
                polished.append(zr)
            continue
        polished.append(zr)
        if mate is not None:
            handled[mate] = True
            polished.append(zr.conjugate())

    if cfg.is_extended:
        exact = p.exact if p.exact else p.coeffs
        polished = [complex(z) for z in _aberth(exact, polished)]
        polished = [
            complex(z.real) if abs(z.imag) < cfg.tau_real else z for z in polished
        ]

    clusters = _cluster(polished, cfg.tau_cluster)
    out = []
    for z, m in clusters:
        if abs(z.imag) < cfg.tau_real:
            z = complex(z.real)
        out.append((z, m))
    out.sort(key=lambda t: (t[0].real, t[0].imag))
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassifiedZero:
    z: complex
    multiplicity: int
    kind: str


@dataclass(frozen=True)
class ZeroLedger:
    """All zeros with interval classes, ordering integers, and counts."""

    zeros: tuple[ClassifiedZero, ...]
    b: int
    Z_left: int
    Z_m10: int
    Z_01: int
    Z_right: int
    Z_c: int
    mu_minus: int
    mu_plus: int

    @property
    def p(self) -> int:
        return self.Z_left

    @property
    def q(self) -> int:
        return self.Z_left + self.Z_m10

    @property
    def r(self) -> int:
        return self.q + self.Z_01

    @property
    def s(self) -> int:
        return self.r + self.Z_right

    @property
    def N(self) -> int:
        return self.Z_m10 + self.Z_01

    def real_roots_expanded(self) -> list[float]:
        """Real zeros in ascending order, one entry per multiplicity."""
        vals = []
        for cz in self.zeros:
            if cz.kind != COMPLEX_PAIR:
                vals.extend([cz.z.real] * cz.multiplicity)
        vals.sort()
        return vals

    def all_roots_expanded(self) -> list[complex]:
        """Real zeros ascending, then complex zeros; multiplicity-expanded."""
        out: list[complex] = [complex(v) for v in self.real_roots_expanded()]
        cplx = [cz for cz in self.zeros if cz.kind == COMPLEX_PAIR]
        cplx.sort(key=lambda cz: (cz.z.real, cz.z.imag))
        for cz in cplx:
            out.extend([cz.z] * cz.multiplicity)
        return out

    def bound_state_roots(self) -> list[tuple[int, float]]:
        """(k, alpha) with k the 1-based position in the real ordering."""
        reals = self.real_roots_expanded()
        return [(k, a) for k, a in enumerate(reals, start=1) if self.p < k <= self.r]


def classify_zeros(
    roots: Sequence[tuple[complex, int]], cfg: NumericConfig, b: int
) -> ZeroLedger:
    """Bin clustered roots by the interval scheme and build the ledger.

    Raises CountMismatchError when multiplicities miss the degree 2b - 1 and
    UnitCircleViolationError when a nonreal root sits inside the unit circle
    (both indicate numerical failure, not a spectral event).
    """
    total = sum(m for _, m in roots)
    expected = max(2 * b - 1, 0)
    if total != expected:
        raise CountMismatchError(
            f"root multiplicities sum to {total}, expected {expected}"
        )

    classified: list[ClassifiedZero] = []
    counts = {RES_LEFT: 0, BOUND_NEG: 0, BOUND_POS: 0, RES_RIGHT: 0}
    mu_minus = mu_plus = 0
    complex_total = 0
    for z, m in roots:
        if abs(z.imag) >= cfg.tau_real:
            if abs(z) <= 1.0 - cfg.tau_real:
                raise UnitCircleViolationError(
                    f"nonreal root {z} inside the unit circle"
                )
            classified.append(ClassifiedZero(z, m, COMPLEX_PAIR))
            complex_total += m
            continue
        x = z.real
        if abs(x + 1.0) <= cfg.tau_edge:
            classified.append(ClassifiedZero(complex(-1.0), m, EDGE_MINUS))
            mu_minus += m
        elif abs(x - 1.0) <= cfg.tau_edge:
            classified.append(ClassifiedZero(complex(1.0), m, EDGE_PLUS))
            mu_plus += m
        elif x < -1.0:
            classified.append(ClassifiedZero(complex(x), m, RES_LEFT))
            counts[RES_LEFT] += m
        elif x < 0.0:
            classified.append(ClassifiedZero(complex(x), m, BOUND_NEG))
            counts[BOUND_NEG] += m
        elif x < 1.0:
            classified.append(ClassifiedZero(complex(x), m, BOUND_POS))
            counts[BOUND_POS] += m
        else:
            classified.append(ClassifiedZero(complex(x), m, RES_RIGHT))
            counts[RES_RIGHT] += m
    if complex_total % 2 != 0:
        raise CountMismatchError("nonreal roots are not conjugate-paired")

    real = [cz for cz in classified if cz.kind != COMPLEX_PAIR]
    real.sort(key=lambda cz: cz.z.real)
    cplx = [cz for cz in classified if cz.kind == COMPLEX_PAIR]
    cplx.sort(key=lambda cz: (cz.z.real, cz.z.imag))

    return ZeroLedger(
        zeros=tuple(real + cplx),
        b=b,
        Z_left=counts[RES_LEFT] + mu_minus,
        Z_m10=counts[BOUND_NEG],
        Z_01=counts[BOUND_POS],
        Z_right=counts[RES_RIGHT] + mu_plus,
        Z_c=complex_total // 2,
        mu_minus=mu_minus,
        mu_plus=mu_plus,
    )


# ---------------------------------------------------------------------------
# norming constants


@dataclass(frozen=True)
class BoundState:
    k: int
    alpha: float
    lam: float
    c2_product: float
    c2_residue: float


def _norming_constants_mp(
    ledger: ZeroLedger, p: JostPolynomial, dps: int = 40
) -> list[BoundState]:
    """Multiprecision variant of :func:`norming_constants`.

    A bound state alpha can have a resonance near its reciprocal 1/alpha,
    which makes the factor (1 - alpha * r) — and equally f0(1/alpha) —
    cancel catastrophically in double arithmetic.  Re-polishing every root
    from the exact coefficients and evaluating both formulas at working
    precision removes that loss.
    """
    from fractions import Fraction

    from mpmath import mp, mpc, mpf

    with mp.workdps(dps):
        exact = p.exact if p.exact else p.coeffs

        def conv(c):
            if isinstance(c, Fraction):
                return mpf(c.numerator) / mpf(c.denominator)
            return mpf(c)

        coeffs = [conv(c) for c in exact]
        dcoeffs = [j * coeffs[j] for j in range(1, len(coeffs))]

        def horner(cs, z):
            acc = mpc(0)
            for a in reversed(cs):
                acc = acc * z + a
            return acc

        def polish(z: complex, mult: int):
            w = mpc(z)
            for _ in range(10):
                d = horner(dcoeffs, w)
                if d == 0:
                    break
                step = mult * horner(coeffs, w) / d
                w -= step
                if abs(step) < mpf(10) ** (-(dps - 5)):
                    break
            return w

        reals: list = []
        cplx: list = []
        for cz in ledger.zeros:
            w = polish(cz.z, cz.multiplicity)
            if cz.kind == COMPLEX_PAIR:
                cplx.extend([w] * cz.multiplicity)
            else:
                reals.extend([w.real] * cz.multiplicity)
        reals.sort()

        out = []
        for k, _ in ledger.bound_state_roots():
            alpha = reals[k - 1]
            num = mpc(1)
            for a in reals + cplx:
                num *= 1 - alpha * a
            den = mpc(1)
            for j, a in enumerate(reals):
                if j != k - 1:
                    den *= alpha - a
            for a in cplx:
                den *= alpha - a
            c2_product = (num / den).real / alpha ** (2 * ledger.b)
            c2_residue = (
                horner(coeffs, 1 / alpha) / (alpha * horner(dcoeffs, alpha))
            ).real
            out.append(
                BoundState(
                    k=k,
                    alpha=float(alpha),
                    lam=float(2 - alpha - 1 / alpha),
                    c2_product=float(c2_product),
                    c2_residue=float(c2_residue),
                )
            )
        return out


def norming_constants(
    ledger: ZeroLedger, p: JostPolynomial, cfg: NumericConfig | None = None
) -> list[BoundState]:
    """Marchenko norming constants via two independent formulas.

    Product route: c^2 = alpha^(-2b) prod_s (1 - alpha alpha_s) /
    prod_{j != k} (alpha - alpha_j) over the multiplicity-expanded root
    list.  Residue route: c^2 = f0(1/alpha) / (alpha f0'(alpha)).

    With an extended-precision config both formulas are evaluated in
    multiprecision, which survives the near-reciprocal bound-state /
    resonance configuration that defeats double arithmetic.
    """
    if cfg is not None and cfg.is_extended:
        return _norming_constants_mp(ledger, p)
    all_roots = ledger.all_roots_expanded()
    reals = ledger.real_roots_expanded()
    out = []
    for k, alpha in ledger.bound_state_roots():
        num = 1.0 + 0.0j
        for a in all_roots:
            num *= 1.0 - alpha * a
        den = 1.0 + 0.0j
        skipped = False
        for a in all_roots:
            # skip exactly one instance of the bound-state root itself
            if not skipped and a.imag == 0.0 and a.real == reals[k - 1]:
                skipped = True
                continue
            den *= alpha - a
        c2_product = (num / den).real / alpha ** (2 * ledger.b)
        c2_residue = (
            jost_eval(p, 1.0 / alpha) / (alpha * jost_eval_derivative(p, alpha))
        ).real
        lam = 2.0 - alpha - 1.0 / alpha
        out.append(BoundState(k=k, alpha=alpha, lam=lam, c2_product=c2_product,
                              c2_residue=c2_residue))
    return out


def norming_constant_at(
    ledger: ZeroLedger,
    p: JostPolynomial,
    alpha: float,
    cfg: NumericConfig | None = None,
) -> BoundState:
    """Norming constant for one requested zero; must be a bound state."""
    for bs in norming_constants(ledger, p, cfg):
        if abs(bs.alpha - alpha) < 1e-12 * max(1.0, abs(alpha)):
            return bs
    raise NotABoundStateError(f"{alpha} is not a bound-state zero of this ledger")


# ---------------------------------------------------------------------------
# sign diagnostics


@dataclass(frozen=True)
class SignRecord:
    k: int
    alpha: float
    sign_p_minus: int
    sign_p_plus: int
    sign_denominator: int
    parity: int
    denominator_matches_parity: bool
    product_matches_parity: bool


def sign_diagnostics(ledger: ZeroLedger) -> list[SignRecord]:
    """Per-bound-state signs of the resonance products and the derivative sign.

    Checks the alternation law: sgn prod_{j != k} (alpha_k - alpha_j) equals
    (-1)^(k-1), and the matching alternation of the one-sided resonance
    product P- (for alpha in (-1,0)) or P+ (for alpha in (0,1)).
    """
    reals = ledger.real_roots_expanded()
    all_roots = ledger.all_roots_expanded()
    p_, r_, s_ = ledger.p, ledger.r, ledger.s
    out = []
    for k, alpha in ledger.bound_state_roots():
        pm = 1.0
        for j in range(p_):
            pm *= 1.0 - reals[j] * alpha
        pp = 1.0
        for j in range(r_, s_):
            pp *= 1.0 - reals[j] * alpha
        den = 1.0 + 0.0j
        skipped = False
        for a in all_roots:
            if not skipped and a.imag == 0.0 and a.real == reals[k - 1]:
                skipped = True
                continue
            den *= alpha - a
        parity = 1 if (k - 1) % 2 == 0 else -1
        s_pm = 1 if pm > 0 else -1
        s_pp = 1 if pp > 0 else -1
        s_den = 1 if den.real > 0 else -1
        relevant = s_pm if alpha < 0 else s_pp
        out.append(
            SignRecord(
                k=k,
                alpha=alpha,
                sign_p_minus=s_pm,
                sign_p_plus=s_pp,
                sign_denominator=s_den,
                parity=parity,
                denominator_matches_parity=(s_den == parity),
                product_matches_parity=(relevant == parity),
            )
        )
    return out


# ---------------------------------------------------------------------------
# large-b bound-state scan


_GEO_EDGE = np.concatenate([1.0 - np.logspace(-12, -0.3, 240), [1.0 - 1e-13]])


def bound_state_scan(V: Potential, cfg: NumericConfig) -> list:
    """Locate the real zeros of f0 in (-1, 1) by recursion-evaluated sign scan.

    Works where coefficient-based root finding cannot: the recursion
    evaluation stays well conditioned for |z| < 1 at any support length.
    Bound-state zeros are simple, so every zero in (-1, 1) is a sign
    crossing; because the bound-state count can never exceed b, finding b
    crossings certifies N = b.

    Standard mode refines each bracket with Brent to float accuracy;
    extended mode re-polishes each root with multiprecision Newton steps.
    Returns the roots in ascending order (floats, or mpf in extended mode).
    """
    from scipy.optimize import brentq

    b = V.b
    if b == 0:
        return []
    values = list(V.values)
    brackets: list[tuple[float, float]] = []
    for density in (64, 256, 1024, 4096):
        uni = np.linspace(-1.0 + 1e-12, 1.0 - 1e-12, density * b + 64)
        xs = np.unique(np.concatenate([uni, _GEO_EDGE, -_GEO_EDGE]))
        xs = xs[np.abs(xs) > 1e-13]
        vals = jost_eval_recursive_grid(values, xs)
        sgn = np.sign(vals)
        idx = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
        brackets = [(float(xs[i]), float(xs[i + 1])) for i in idx]
        if len(brackets) >= b:
            break

    roots = [
        brentq(lambda x: jost_eval_recursive_grid(values, np.array([x]))[0], a, c,
               xtol=1e-15)
        for a, c in brackets
    ]
    roots.sort()

    if cfg.is_extended:
        from mpmath import mp, mpf

        with mp.workdps(40):
            mpv = [mpf(v) for v in values]
            refined = []
            for r0 in roots:
                z = mpf(r0)
                for _ in range(5):
                    f, df = jost_eval_recursive_pair(mpv, z)
                    if df == 0:
                        break
                    z = z - f / df
                refined.append(z)
            return refined
    return roots
