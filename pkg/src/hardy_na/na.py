"""Norm-attainment verdicts for dual truncated Toeplitz operators.

A symbol is one of three classes: a unimodular quotient of finite
Blaschke products, an analytic rational function with poles off the
closed disk, or an arc indicator.  For the quotient class the
analytic/coanalytic factorization criteria are decided exactly by
Blaschke gcd arithmetic and certified by an extremal-subspace generator;
the strictly-contractive rational class is refuted outright; indicator
symbols get the explicit mixed extremal construction, which is evidence
rather than proof because finite sections always attain their norm.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .blaschke import (
    BlaschkeProduct,
    PoleInDisk,
    RationalFunction,
    divide,
    gcd,
    is_inner_rational,
    multiply,
)
from .fourier import ArcSet, FourierVector, arc_indicator_coeffs, convolve
from .operators import (
    analytic_from_minus,
    apply_PKu,
    dtto_block,
    dtto_direct,
    extremal_space,
    from_window,
    kuperp_block,
    model_projection,
    operator_norm,
    toeplitz,
)

GRID = 4096
_CIRCLE = np.exp(2j * np.pi * np.arange(GRID) / GRID)


class UnsupportedCombination(ValueError):
    """Symbol/inner-function pair outside the implemented constructions."""


class UnimodularityClass(enum.Enum):
    UNIMODULAR_AE = "unimodular_ae"
    STRICTLY_LESS_AE = "strictly_less_ae"
    MIXED = "mixed"


class Verdict(enum.Enum):
    NA_ANALYTIC = "NA_analytic"
    NA_COANALYTIC = "NA_coanalytic"
    NA_BOTH = "NA_both"
    NA_MIXED_EVIDENCE_ONLY = "NA_mixed_evidence_only"
    NOT_NA = "NotNA"
    UNDECIDED = "Undecided"

    @property
    def attains_analytic(self) -> bool:
        return self in (Verdict.NA_ANALYTIC, Verdict.NA_BOTH)

    @property
    def attains_coanalytic(self) -> bool:
        return self in (Verdict.NA_COANALYTIC, Verdict.NA_BOTH)


# ---------------------------------------------------------------------------
# symbol classes
# ---------------------------------------------------------------------------


def _blaschke_dict(b: BlaschkeProduct):
    return {
        "constant": [b.constant.real, b.constant.imag],
        "power": b.monomial_power,
        "zeros": [[a.real, a.imag, m] for a, m in b.zeros],
    }


@dataclass(frozen=True)
class RationalUnimodular:
    """phi = c * num * conj(den) on the circle, num and den coprime."""

    c: complex = 1.0 + 0j
    num: BlaschkeProduct = BlaschkeProduct()
    den: BlaschkeProduct = BlaschkeProduct()

    def __post_init__(self):
        c = complex(self.c) * self.num.constant * np.conj(self.den.constant)
        if abs(abs(c) - 1.0) > 1e-12:
            raise ValueError("constant must be unimodular")
        num, den = self.num.normalized(), self.den.normalized()
        g = gcd(num, den)
        if not g.is_unit:
            num, den = divide(num, g), divide(den, g)
        object.__setattr__(self, "c", c / abs(c))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def evaluate(self, z):
        return self.c * self.num(z) * np.conj(self.den(z))

    def sup_norm(self) -> float:
        return 1.0

    def coeff_window(self, N: int, eps: float = 1e-14) -> FourierVector:
        full = convolve(self.num.coeffs(eps), self.den.coeffs(eps).conj()) * self.c
        return full.restrict(-N, N) if full.bandwidth > N else full

    def conj(self) -> "RationalUnimodular":
        return RationalUnimodular(np.conj(self.c), self.den, self.num)

    def describe(self) -> str:
        return f"rational-unimodular degree ({self.num.degree}/{self.den.degree})"


@dataclass(frozen=True)
class RationalAnalytic:
    """Rational symbol analytic across the closed disk."""

    f: RationalFunction

    def __post_init__(self):
        for s in self.f.den_roots():
            if abs(s) <= 1.0 + 1e-12:
                raise PoleInDisk(f"pole at {s} lies in the closed unit disk")

    def evaluate(self, z):
        return self.f(z)

    def sup_norm(self) -> float:
        return self.f.sup_norm()

    def coeff_window(self, N: int, eps: float = 1e-14) -> FourierVector:
        if self.f.degree_den == 0:
            poly = FourierVector(0, self.f.num / self.f.den[0])
            return poly.restrict(-N, N) if poly.bandwidth > N else poly
        return self.f.coeff_window(N)

    def describe(self) -> str:
        return f"rational-analytic degree ({self.f.degree_num}/{self.f.degree_den})"


@dataclass(frozen=True)
class ArcIndicator:
    """Indicator of a finite union of arcs, as an L-infinity symbol."""

    E: ArcSet

    def __post_init__(self):
        if not (0.0 < self.E.measure() <= 1.0 + 1e-15):
            raise ValueError("arc set must have positive measure")

    def evaluate(self, z):
        t = np.mod(np.angle(z), 2.0 * np.pi)
        return self.E.indicator(t).astype(complex)

    def sup_norm(self) -> float:
        return 1.0

    def coeff_window(self, N: int, eps: float = 1e-14) -> FourierVector:
        return arc_indicator_coeffs(self.E, N)

    def describe(self) -> str:
        return f"arc indicator, measure {self.E.measure():.6f}"


SymbolSpec = RationalUnimodular | RationalAnalytic | ArcIndicator


# ---------------------------------------------------------------------------
# witnesses and reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NAWitnessAnalytic:
    psi_plus: BlaschkeProduct
    chi_plus: BlaschkeProduct
    d: BlaschkeProduct
    u1: BlaschkeProduct
    extremal_generator: BlaschkeProduct
    grid_residual: float

    def to_dict(self):
        return {
            "psi_plus": _blaschke_dict(self.psi_plus),
            "chi_plus": _blaschke_dict(self.chi_plus),
            "d": _blaschke_dict(self.d),
            "u1": _blaschke_dict(self.u1),
            "extremal_generator": _blaschke_dict(self.extremal_generator),
            "grid_residual": self.grid_residual,
        }


@dataclass(frozen=True)
class NAWitnessCoanalytic:
    psi_minus: BlaschkeProduct
    chi_minus: BlaschkeProduct
    u1: BlaschkeProduct
    extremal_generator_conj: BlaschkeProduct
    grid_residual: float

    def to_dict(self):
        return {
            "psi_minus": _blaschke_dict(self.psi_minus),
            "chi_minus": _blaschke_dict(self.chi_minus),
            "u1": _blaschke_dict(self.u1),
            "extremal_generator_conj": _blaschke_dict(self.extremal_generator_conj),
            "grid_residual": self.grid_residual,
        }


@dataclass(frozen=True)
class NumericEvidence:
    N: int
    sigma_max: float
    membership_residual: float

    def to_dict(self):
        return {
            "N": self.N,
            "sigma_max": self.sigma_max,
            "membership_residual": self.membership_residual,
        }


@dataclass(frozen=True)
class NAReport:
    verdict: Verdict
    analytic: NAWitnessAnalytic | None = None
    coanalytic: NAWitnessCoanalytic | None = None
    yoshino: tuple | None = None
    numeric_evidence: tuple = ()
    notes: str = ""

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "analytic": self.analytic.to_dict() if self.analytic else None,
            "coanalytic": self.coanalytic.to_dict() if self.coanalytic else None,
            "yoshino": (
                [_blaschke_dict(self.yoshino[0]), _blaschke_dict(self.yoshino[1])]
                if self.yoshino
                else None
            ),
            "numeric_evidence": [ev.to_dict() for ev in self.numeric_evidence],
            "notes": self.notes,
        }


@dataclass(frozen=True)
class NumericConfig:
    N_list: tuple = (16, 32, 64, 128)
    eps: float = 1e-14
    cluster_tol_factor: float = 1e-8
    arc_split: tuple | None = None  # ((a1,b1),(a2,b2)) subarcs hosting the extremal

    def to_dict(self):
        return {
            "N_list": list(self.N_list),
            "eps": self.eps,
            "cluster_tol_factor": self.cluster_tol_factor,
            "arc_split": [list(p) for p in self.arc_split] if self.arc_split else None,
        }


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def unimodularity_class(phi: SymbolSpec) -> UnimodularityClass:
    """Classify |phi| against its sup norm: constant a.e., strictly below
    a.e., or genuinely mixed."""
    if isinstance(phi, RationalUnimodular):
        return UnimodularityClass.UNIMODULAR_AE
    if isinstance(phi, ArcIndicator):
        if phi.E.measure() >= 1.0 - 1e-12:
            return UnimodularityClass.UNIMODULAR_AE
        return UnimodularityClass.MIXED
    t = np.linspace(0.0, 2.0 * np.pi, 8192, endpoint=False)
    vals = np.abs(phi.f(np.exp(1j * t)))
    m = phi.sup_norm()
    if np.min(vals) >= m * (1.0 - 1e-9):
        return UnimodularityClass.UNIMODULAR_AE
    # a rational modulus meets its max on a set of measure zero unless it
    # is constant, so a thin near-max grid set means strict inequality a.e.
    near_max = np.mean(vals >= m * (1.0 - 1e-6))
    if near_max < 0.05 and np.min(vals) < m * (1.0 - 1e-9):
        return UnimodularityClass.STRICTLY_LESS_AE
    return UnimodularityClass.MIXED


def non_na_rule(phi: SymbolSpec) -> str | None:
    """The one sound refutation: |phi| < sup|phi| a.e. kills every extremal.

    Returns the proof sentence, or None when the rule does not apply
    (absence of a factorization witness is never a refutation).
    """
    if unimodularity_class(phi) is UnimodularityClass.STRICTLY_LESS_AE:
        return (
            "|phi| is strictly below its sup norm a.e., so ||M_phi h|| < "
            "||phi||_inf ||h|| for every nonzero h and no extremal vector exists"
        )
    return None


# ---------------------------------------------------------------------------
# factorization witnesses
# ---------------------------------------------------------------------------


def analytic_na(phi: RationalUnimodular, u: BlaschkeProduct) -> NAWitnessAnalytic:
    """Factor phi = conj(u) conj(psi_plus) chi_plus and emit the extremal data.

    psi_plus is minimal (denominator divided by gcd(u, den)); the extremal
    set on the analytic side is generated by u * psi_plus * u1 where
    u1 = u / gcd(u, chi_plus).  Always succeeds for this symbol class.
    """
    g = gcd(u, phi.den)
    psi_plus = divide(phi.den, g)
    chi_plus = multiply(phi.num, divide(u, g)).scale(phi.c * u.constant)
    d = gcd(u, chi_plus)
    u1 = divide(u, d)
    generator = multiply(multiply(u, psi_plus), u1)
    residual = float(
        np.max(
            np.abs(
                phi.evaluate(_CIRCLE) * u(_CIRCLE) * psi_plus(_CIRCLE)
                - chi_plus(_CIRCLE)
            )
        )
    )
    return NAWitnessAnalytic(psi_plus, chi_plus, d, u1, generator, residual)


def coanalytic_na(phi: RationalUnimodular, u: BlaschkeProduct) -> NAWitnessCoanalytic:
    """Factor phi = u psi_minus conj(chi_minus) via the conjugated symbol.

    Delegates to the analytic criterion for conj(phi); the coanalytic
    extremals are the conjugation images conj(psi_minus u1) H^2_-.
    """
    w = analytic_na(phi.conj(), u)
    generator_conj = multiply(w.psi_plus, w.u1)
    residual = float(
        np.max(
            np.abs(
                phi.evaluate(_CIRCLE)
                - u(_CIRCLE) * w.psi_plus(_CIRCLE) * np.conj(w.chi_plus(_CIRCLE))
            )
        )
    )
    return NAWitnessCoanalytic(w.psi_plus, w.chi_plus, w.u1, generator_conj, residual)


def yoshino_na(phi: SymbolSpec):
    """Toeplitz-operator criterion: phi = sup|phi| Theta1 conj(Theta2).

    Returns the coprime inner pair, or None when no such factorization
    is available in the rational classes.
    """
    if isinstance(phi, RationalUnimodular):
        return phi.num.scale(phi.c), phi.den
    if isinstance(phi, RationalAnalytic):
        scale = phi.sup_norm()
        if scale == 0:
            return None
        normalized = RationalFunction(phi.f.num / scale, phi.f.den)
        ok, witness = is_inner_rational(normalized)
        if ok:
            return witness, BlaschkeProduct.unit()
        return None
    if phi.E.measure() >= 1.0 - 1e-12:
        return BlaschkeProduct.unit(), BlaschkeProduct.unit()
    return None


def toeplitz_to_dtto_bridge(
    theta1: BlaschkeProduct, theta2: BlaschkeProduct, u: BlaschkeProduct
) -> BlaschkeProduct:
    """Extremal-family generator u * Theta2 inherited from a norm-attaining
    Toeplitz operator (extremals u Theta2 H^2 inside u H^2)."""
    del theta1
    return multiply(u, theta2)


def direct_sum_na(alpha: float, beta: float, na_A: bool, na_B: bool):
    """Norm attainment of a direct sum from its summands.

    Returns (attained, side) where side names a maximal-norm summand
    hosting an extremal vector: "A", "B", "either", or None.
    """
    if alpha < 0 or beta < 0:
        raise ValueError("operator norms are nonnegative")
    if alpha > beta:
        return na_A, ("A" if na_A else None)
    if beta > alpha:
        return na_B, ("B" if na_B else None)
    if na_A and na_B:
        return True, "either"
    if na_A:
        return True, "A"
    if na_B:
        return True, "B"
    return False, None


# ---------------------------------------------------------------------------
# numeric kernels and evidence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelEstimate:
    dimension: int
    basis: np.ndarray = field(repr=False)
    singular_values: np.ndarray = field(repr=False)


def kernel_Mplus(
    phi: SymbolSpec, u: BlaschkeProduct, N: int, tol: float = 1e-8
) -> KernelEstimate:
    """Numeric kernel of h -> P_{K_u}(phi u h) on the analytic window.

    For analytic phi the kernel is shift invariant, hence of Beurling
    form; only its dimension trajectory is reported here.
    """
    uc = u.coeffs()
    sym = phi.coeff_window(2 * N + len(uc.coeffs) + 2)
    M = model_projection(u, N).entries @ toeplitz(convolve(uc, sym), N).entries
    _, s, vh = np.linalg.svd(M)
    small = s < tol
    return KernelEstimate(int(np.sum(small)), vh[small].conj().T.copy(), s)


def kernel_Mminus(
    phi: SymbolSpec, u: BlaschkeProduct, N: int, tol: float = 1e-8
) -> KernelEstimate:
    """Numeric kernel of g -> P_{K_u}(phi g) on the anti-analytic window."""
    uc = u.coeffs()
    sym = phi.coeff_window(2 * N + len(uc.coeffs) + 2)
    M = model_projection(u, N).entries @ analytic_from_minus(sym, N).entries
    _, s, vh = np.linalg.svd(M)
    small = s < tol
    return KernelEstimate(int(np.sum(small)), vh[small].conj().T.copy(), s)


def _membership_residual(sym: FourierVector, uc: FourierVector, v: FourierVector):
    """Distance of M_phi v from the complement of the model space, relative."""
    return apply_PKu(convolve(sym, v), uc).norm() / v.norm()


def _numeric_evidence(phi: SymbolSpec, u: BlaschkeProduct, cfg: NumericConfig):
    uc = u.coeffs(cfg.eps)
    rows = []
    for N in cfg.N_list:
        sym = phi.coeff_window(2 * N + len(uc.coeffs) + 2, cfg.eps)
        M = dtto_block(sym, uc, N)
        sub = extremal_space(M)
        v = from_window(sub.basis[:, 0], kuperp_block(N), uc)
        rows.append(
            NumericEvidence(N, sub.sigma_max, _membership_residual(sym, uc, v))
        )
    return tuple(rows)


def _is_shift(u: BlaschkeProduct) -> bool:
    return u.monomial_power == 1 and not u.zeros


def _arc_extremal_evidence(phi: ArcIndicator, u: BlaschkeProduct, cfg: NumericConfig):
    """The explicit mixed extremal for the shift: h supported in E with
    mean zero, built from two disjoint subarcs."""
    if not _is_shift(u):
        raise UnsupportedCombination(
            "the mixed-symbol construction is implemented only for u = z"
        )
    if cfg.arc_split is not None:
        E1, E2 = ArcSet([cfg.arc_split[0]]), ArcSet([cfg.arc_split[1]])
    else:
        a, b = phi.E.arcs[0]
        mid = 0.5 * (a + b)
        E1, E2 = ArcSet([(a, mid)]), ArcSet([(mid, b)])
    ratio = E1.measure() / E2.measure()
    uc = FourierVector.basis(1)
    rows = []
    for N in cfg.N_list:
        sym = arc_indicator_coeffs(phi.E, 2 * N + 4)
        h = arc_indicator_coeffs(E1, N) - ratio * arc_indicator_coeffs(E2, N)
        out = dtto_direct(sym, uc, h)
        rows.append(
            NumericEvidence(
                N,
                operator_norm(dtto_block(sym, uc, N)),
                (out - h).norm() / h.norm(),
            )
        )
    return tuple(rows), (E1, E2, ratio)


# ---------------------------------------------------------------------------
# the decision pipeline
# ---------------------------------------------------------------------------


def decide(
    phi: SymbolSpec, u: BlaschkeProduct, cfg: NumericConfig = NumericConfig()
) -> NAReport:
    """Full verdict for D_phi on the complement of the model space of u.

    Symbolic witnesses prove attainment; the strict-contraction rule
    refutes it; everything else is numeric evidence only, because finite
    sections attain their norms unconditionally.
    """
    if u.degree == 0:
        raise ValueError("the inner function must be nonconstant")
    reason = non_na_rule(phi)
    if reason is not None:
        return NAReport(
            Verdict.NOT_NA,
            numeric_evidence=_numeric_evidence(phi, u, cfg),
            notes=reason,
        )

    if isinstance(phi, ArcIndicator) and phi.E.measure() >= 1.0 - 1e-12:
        phi = RationalUnimodular()  # the constant symbol 1

    if isinstance(phi, RationalAnalytic):
        pair = yoshino_na(phi)
        if pair is not None and pair[1].is_unit:
            phi = RationalUnimodular(pair[0].constant, pair[0].normalized())
        else:
            return NAReport(
                Verdict.UNDECIDED,
                numeric_evidence=_numeric_evidence(phi, u, cfg),
                notes=(
                    "analytic symbol with constant modulus but no rational "
                    "inner witness; no symbolic criterion applies"
                ),
            )

    if isinstance(phi, RationalUnimodular):
        wa = analytic_na(phi, u)
        wc = coanalytic_na(phi, u)
        theta = yoshino_na(phi)
        bridge = toeplitz_to_dtto_bridge(*theta, u)
        notes = "analytic and coanalytic factorizations both hold"
        if bridge != wa.extremal_generator:
            notes += "; bridge generator disagrees with the direct factorization"
        return NAReport(
            Verdict.NA_BOTH,
            analytic=wa,
            coanalytic=wc,
            yoshino=theta,
            numeric_evidence=_numeric_evidence(phi, u, cfg),
            notes=notes,
        )

    # arc indicator, genuinely mixed modulus
    try:
        rows, (E1, E2, ratio) = _arc_extremal_evidence(phi, u, cfg)
    except UnsupportedCombination as exc:
        return NAReport(
            Verdict.UNDECIDED,
            numeric_evidence=_numeric_evidence(phi, u, cfg),
            notes=str(exc),
        )
    return NAReport(
        Verdict.NA_MIXED_EVIDENCE_ONLY,
        numeric_evidence=rows,
        notes=(
            "explicit extremal h = 1_{E1} - (m(E1)/m(E2)) 1_{E2} supported "
            f"inside E with mean zero; subarcs {E1.arcs[0]} and {E2.arcs[0]}, "
            f"ratio {ratio:.6g}; residuals are truncation evidence, not proof"
        ),
    )
