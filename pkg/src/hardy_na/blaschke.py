"""Exact arithmetic of finite Blaschke products and rational functions.

A finite Blaschke product is stored symbolically as a unimodular constant,
a power of z, and a multiset of zeros inside the disk.  Multiplication,
gcd and exact division on the zero multisets drive every factorization
argument; the only numerics involved are a matching tolerance for zeros
and grid checks of boundary modulus.
"""

from dataclasses import dataclass, field

import numpy as np

from .fourier import FourierVector

TAU_ZERO = 1e-9
_BOUNDARY_MARGIN = 1e-12


class NotDivisible(ArithmeticError):
    """Raised when exact Blaschke division is requested but impossible."""


class PoleInDisk(ValueError):
    """Raised for rational functions with a pole in the closed unit disk."""


class ZeroFunction(ValueError):
    """Raised when the zero function is passed where it is meaningless."""


def _merge_zeros(pairs, tol=TAU_ZERO):
    """Cluster (value, multiplicity) pairs whose values agree within tol."""
    merged = []
    for a, m in sorted(pairs, key=lambda p: (p[0].real, p[0].imag)):
        if m <= 0:
            continue
        for i, (b, k) in enumerate(merged):
            if abs(a - b) <= tol:
                merged[i] = (b, k + m)
                break
        else:
            merged.append((complex(a), int(m)))
    return tuple(merged)


@dataclass(frozen=True)
class BlaschkeProduct:
    """constant * z**monomial_power * prod of factors (z - a)/(1 - conj(a) z)."""

    constant: complex = 1.0 + 0j
    monomial_power: int = 0
    zeros: tuple = ()

    def __post_init__(self):
        c = complex(self.constant)
        if abs(abs(c) - 1.0) > 1e-12:
            raise ValueError(f"constant must be unimodular, got |c| = {abs(c)}")
        object.__setattr__(self, "constant", c / abs(c))
        if self.monomial_power < 0:
            raise ValueError("monomial_power must be >= 0")
        zs = _merge_zeros(
            (complex(a), int(m)) for a, m in self.zeros
        )
        for a, _ in zs:
            if abs(a) <= TAU_ZERO:
                raise ValueError("zero at the origin belongs in monomial_power")
            if abs(a) >= 1.0 - _BOUNDARY_MARGIN:
                raise ValueError(f"zero {a} too close to the unit circle")
        object.__setattr__(self, "zeros", zs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def unit() -> "BlaschkeProduct":
        return BlaschkeProduct()

    @staticmethod
    def monomial(k: int, constant: complex = 1.0) -> "BlaschkeProduct":
        """constant * z**k."""
        return BlaschkeProduct(constant, k, ())

    @staticmethod
    def factor(a: complex) -> "BlaschkeProduct":
        """Single Blaschke factor with zero a (a = 0 gives z itself)."""
        if abs(a) <= TAU_ZERO:
            return BlaschkeProduct.monomial(1)
        return BlaschkeProduct(1.0, 0, ((a, 1),))

    @staticmethod
    def from_zeros(zeros, constant: complex = 1.0) -> "BlaschkeProduct":
        power = sum(1 for a in zeros if abs(a) <= TAU_ZERO)
        rest = [(a, 1) for a in zeros if abs(a) > TAU_ZERO]
        return BlaschkeProduct(constant, power, rest)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return self.monomial_power + sum(m for _, m in self.zeros)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    def zero_list(self):
        """Zeros repeated by multiplicity, excluding the origin."""
        return [a for a, m in self.zeros for _ in range(m)]

    def scale(self, c: complex) -> "BlaschkeProduct":
        """Multiply by a unimodular constant."""
        return BlaschkeProduct(self.constant * c, self.monomial_power, self.zeros)

    def normalized(self) -> "BlaschkeProduct":
        return BlaschkeProduct(1.0, self.monomial_power, self.zeros)

    def __eq__(self, other) -> bool:
        """Equality up to unimodular constant (zeros matched within TAU_ZERO)."""
        if not isinstance(other, BlaschkeProduct):
            return NotImplemented
        if self.monomial_power != other.monomial_power or len(self.zeros) != len(
            other.zeros
        ):
            return False
        return all(
            abs(a - b) <= TAU_ZERO and m == k
            for (a, m), (b, k) in zip(self.zeros, other.zeros)
        )

    def equals_with_phase(self, other: "BlaschkeProduct", tol: float = 1e-9) -> bool:
        return self == other and abs(self.constant - other.constant) <= tol

    # -- evaluation and coefficients -----------------------------------

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.constant * z**self.monomial_power * np.ones_like(z)
        for a, m in self.zeros:
            out *= ((z - a) / (1.0 - np.conj(a) * z)) ** m
        return out if out.shape else complex(out)

    def conj_on_circle(self, z):
        """Boundary values of conj(B) (= 1/B on the circle)."""
        return np.conj(self(z))

    def coeffs(self, eps: float = 1e-14) -> FourierVector:
        """Taylor window [0, N] with absolute coefficient tail below eps.

        Coefficients are read off an oversampled FFT; the window length
        comes from a Cauchy estimate on a circle of radius s between the
        largest zero modulus and 1/s where the product is still analytic.
        """
        if eps <= 0:
            raise ValueError("eps must be positive")
        if not self.zeros:
            return FourierVector.basis(self.monomial_power, self.constant)
        r = max(abs(a) for a, _ in self.zeros)
        s = 0.5 * (1.0 + 1.0 / r)
        grid = np.exp(2j * np.pi * np.arange(512) / 512)
        max_s = float(np.max(np.abs(self(s * grid)))) * 1.5
        n_tail = int(np.ceil(np.log(max_s / (eps * (s - 1.0))) / np.log(s))) + 1
        n_tail = max(n_tail, self.degree + 1)
        m = 1 << int(np.ceil(np.log2(4 * (n_tail + 1))))
        samples = self(np.exp(2j * np.pi * np.arange(m) / m))
        c = np.fft.fft(samples) / m
        return FourierVector(0, c[: n_tail + 1])


def multiply(A: BlaschkeProduct, B: BlaschkeProduct) -> BlaschkeProduct:
    return BlaschkeProduct(
        A.constant * B.constant,
        A.monomial_power + B.monomial_power,
        A.zeros + B.zeros,
    )


def gcd(A: BlaschkeProduct, B: BlaschkeProduct) -> BlaschkeProduct:
    """Greatest common inner divisor; constant normalized to 1."""
    common = []
    for a, m in A.zeros:
        for b, k in B.zeros:
            if abs(a - b) <= TAU_ZERO:
                common.append((a, min(m, k)))
                break
    return BlaschkeProduct(
        1.0, min(A.monomial_power, B.monomial_power), tuple(common)
    )


def divide(A: BlaschkeProduct, D: BlaschkeProduct) -> BlaschkeProduct:
    """Exact quotient A/D; raises NotDivisible if D does not divide A."""
    if D.monomial_power > A.monomial_power:
        raise NotDivisible("monomial power of divisor exceeds dividend")
    remaining = list(A.zeros)
    for b, k in D.zeros:
        for i, (a, m) in enumerate(remaining):
            if abs(a - b) <= TAU_ZERO and m >= k:
                remaining[i] = (a, m - k)
                break
        else:
            raise NotDivisible(f"zero {b} (multiplicity {k}) not present in dividend")
    return BlaschkeProduct(
        1.0,
        A.monomial_power - D.monomial_power,
        tuple((a, m) for a, m in remaining if m > 0),
    )


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _strip(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    nz = np.abs(c) > 0
    if not nz.any():
        return np.zeros(1, dtype=complex)
    return c[: np.max(np.nonzero(nz)) + 1]


def poly_roots(coeffs) -> np.ndarray:
    """Roots via the companion matrix, polished with one Newton step."""
    c = _strip(coeffs)
    if len(c) == 1:
        return np.zeros(0, dtype=complex)
    r = np.polynomial.polynomial.polyroots(c)
    dc = np.polynomial.polynomial.polyder(c)
    val = np.polynomial.polynomial.polyval(r, c)
    dval = np.polynomial.polynomial.polyval(r, dc)
    safe = np.abs(dval) > 1e-30
    r[safe] -= val[safe] / dval[safe]
    return r


def _poly_from_roots(roots, lead=1.0) -> np.ndarray:
    c = np.array([lead], dtype=complex)
    for r in roots:
        c = np.convolve(c, np.array([-r, 1.0], dtype=complex))
    return c


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Quotient of complex polynomials, stored in reduced form.

    Coefficient arrays are ascending in powers of z.  Common roots of
    numerator and denominator (within TAU_ZERO) are cancelled at
    construction and the denominator is made monic.
    """

    num: np.ndarray = field(repr=False)
    den: np.ndarray = field(repr=False)

    def __init__(self, num, den=(1.0,)):
        num, den = _strip(num), _strip(den)
        if len(den) == 1 and den[0] == 0:
            raise ZeroDivisionError("denominator is identically zero")
        if not (len(num) == 1 and num[0] == 0):
            n_roots = list(poly_roots(num))
            d_roots = list(poly_roots(den))
            kept_d = []
            for s in d_roots:
                for i, r in enumerate(n_roots):
                    if abs(r - s) <= TAU_ZERO:
                        del n_roots[i]
                        break
                else:
                    kept_d.append(s)
            n_lead, d_lead = num[-1], den[-1]
            num = _poly_from_roots(n_roots, n_lead / d_lead)
            den = _poly_from_roots(kept_d)
        else:
            den = np.ones(1, dtype=complex)
        num = num.copy()
        den = den.copy()
        num.flags.writeable = False
        den.flags.writeable = False
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def from_poly(coeffs) -> "RationalFunction":
        return RationalFunction(coeffs)

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction([c])

    @property
    def degree_num(self) -> int:
        return len(self.num) - 1

    @property
    def degree_den(self) -> int:
        return len(self.den) - 1

    def is_zero(self) -> bool:
        return len(self.num) == 1 and self.num[0] == 0

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.polynomial.polynomial.polyval(
            z, self.num
        ) / np.polynomial.polynomial.polyval(z, self.den)
        return out if out.shape else complex(out)

    def num_roots(self) -> np.ndarray:
        return poly_roots(self.num)

    def den_roots(self) -> np.ndarray:
        return poly_roots(self.den)

    def multiply(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            np.convolve(self.num, other.num), np.convolve(self.den, other.den)
        )

    def divide(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(
            np.convolve(self.num, other.den), np.convolve(self.den, other.num)
        )

    def sup_norm(self, grid: int = 8192) -> float:
        """Max modulus on the circle: grid scan plus golden-section polish."""
        t = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)
        vals = np.abs(self(np.exp(1j * t)))
        k = int(np.argmax(vals))
        h = 2.0 * np.pi / grid
        return max(float(vals[k]), _golden_max(
            lambda s: float(np.abs(self(np.exp(1j * s)))), t[k] - h, t[k] + h
        ))

    def coeff_window(self, N: int, grid: int = 1 << 14) -> FourierVector:
        """Laurent window [-N, N] sampled by FFT (poles must avoid the circle)."""
        z = np.exp(2j * np.pi * np.arange(grid) / grid)
        c = np.fft.fft(self(z)) / grid
        if N == 0:
            return FourierVector(0, c[:1])
        return FourierVector(-N, np.concatenate([c[-N:], c[: N + 1]]))


def _golden_max(f, a, b, iters=60):
    inv = (np.sqrt(5.0) - 1.0) / 2.0
    x1, x2 = b - inv * (b - a), a + inv * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv * (b - a)
            f1 = f(x1)
    return max(f1, f2)


@dataclass(frozen=True)
class InnerOuterPair:
    inner: BlaschkeProduct
    outer: RationalFunction


def inner_outer(f: RationalFunction) -> InnerOuterPair:
    """Split a rational function with no poles in the closed disk as inner*outer.

    The inner factor collects numerator roots strictly inside the disk;
    roots on or outside the circle stay in the outer factor.
    """
    if f.is_zero():
        raise ZeroFunction("cannot factor the zero function")
    for s in f.den_roots():
        if abs(s) <= 1.0 + _BOUNDARY_MARGIN:
            raise PoleInDisk(f"pole at {s} lies in the closed unit disk")
    roots = f.num_roots()
    inside = [r for r in roots if abs(r) < 1.0 - _BOUNDARY_MARGIN]
    outside = [r for r in roots if abs(r) >= 1.0 - _BOUNDARY_MARGIN]
    inner = BlaschkeProduct.from_zeros(inside)
    # outer = f / inner: multiply numerator by the reflected denominators
    refl = _poly_from_roots([], 1.0)
    for a in inside:
        if abs(a) > TAU_ZERO:
            refl = np.convolve(refl, np.array([1.0, -np.conj(a)], dtype=complex))
    out_num = _poly_from_roots(outside, f.num[-1])
    outer = RationalFunction(np.convolve(out_num, refl), f.den)
    return InnerOuterPair(inner, outer)


def is_inner_rational(f: RationalFunction, tau: float = 1e-9):
    """Decide whether a reduced rational function is a finite Blaschke product.

    Returns (verdict, witness): the witness BlaschkeProduct when the
    modulus is 1 on the circle grid and every pole is the reflection
    1/conj(a) of a numerator zero a, otherwise (False, None).
    """
    if f.is_zero():
        return False, None
    z = np.exp(2j * np.pi * np.arange(4096) / 4096)
    if np.max(np.abs(np.abs(f(z)) - 1.0)) > tau:
        return False, None
    roots = list(f.num_roots())
    if any(abs(r) >= 1.0 - _BOUNDARY_MARGIN for r in roots):
        return False, None
    poles = list(f.den_roots())
    for r in roots:
        if abs(r) <= TAU_ZERO:
            continue
        for i, s in enumerate(poles):
            if abs(s - 1.0 / np.conj(r)) <= TAU_ZERO:
                del poles[i]
                break
        else:
            return False, None
    if poles:
        return False, None
    body = BlaschkeProduct.from_zeros(roots)
    # recover the unimodular constant at a well-conditioned probe point
    probes = np.exp(2j * np.pi * np.arange(7) / 7)
    vals = body(probes)
    k = int(np.argmax(np.abs(vals)))
    c = complex(f(probes[k]) / vals[k])
    if abs(abs(c) - 1.0) > tau:
        return False, None
    return True, body.scale(c / abs(c))
