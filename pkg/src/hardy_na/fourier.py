"""Laurent coefficient arithmetic on the unit circle.

Functions in L^2 of the circle are represented by a finite window of
Fourier coefficients.  Everything downstream (operator matrices, norm
attainment checks) is built on the handful of exact coefficient-level
operations defined here: convolution (pointwise product of functions),
the analytic/anti-analytic projections, the flip f -> conj(f)/z and the
conjugation C_u f = u * conj(f)/z.

All values are immutable; every operation returns a fresh vector.
"""

from dataclasses import dataclass, field

import numpy as np

TRIM_TOL = 1e-15


@dataclass(frozen=True)
class FourierVector:
    """Finite window of Laurent coefficients.

    ``coeffs[k]`` is the coefficient of ``z**(lo + k)``.  The window is
    canonically trimmed: leading/trailing coefficients below ``TRIM_TOL``
    in absolute value are dropped, so two vectors describing the same
    function compare equal.
    """

    lo: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        keep = np.abs(c) > TRIM_TOL
        if not keep.any():
            object.__setattr__(self, "lo", 0)
            c = np.zeros(1, dtype=complex)
        else:
            first, last = np.argmax(keep), len(c) - 1 - np.argmax(keep[::-1])
            object.__setattr__(self, "lo", self.lo + int(first))
            c = c[first : last + 1].copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def bandwidth(self) -> int:
        """Largest absolute frequency carried by the window."""
        return max(abs(self.lo), abs(self.hi))

    def coeff(self, n: int) -> complex:
        if self.lo <= n <= self.hi:
            return complex(self.coeffs[n - self.lo])
        return 0j

    def window(self, n_min: int, n_max: int) -> np.ndarray:
        """Dense coefficient slice for frequencies n_min..n_max, zero padded."""
        out = np.zeros(n_max - n_min + 1, dtype=complex)
        a, b = max(self.lo, n_min), min(self.hi, n_max)
        if a <= b:
            out[a - n_min : b - n_min + 1] = self.coeffs[a - self.lo : b - self.lo + 1]
        return out

    def restrict(self, n_min: int, n_max: int) -> "FourierVector":
        """Keep only frequencies in [n_min, n_max]."""
        return FourierVector(n_min, self.window(n_min, n_max))

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def inner(self, other: "FourierVector") -> complex:
        """L^2 inner product <self, other> = sum f_n * conj(g_n)."""
        a, b = min(self.lo, other.lo), max(self.hi, other.hi)
        return complex(np.vdot(other.window(a, b), self.window(a, b)))

    def conj(self) -> "FourierVector":
        """Pointwise complex conjugate: coefficient n becomes conj(c_{-n})."""
        return FourierVector(-self.hi, np.conj(self.coeffs[::-1]))

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __add__(self, other: "FourierVector") -> "FourierVector":
        a, b = min(self.lo, other.lo), max(self.hi, other.hi)
        return FourierVector(a, self.window(a, b) + other.window(a, b))

    def __sub__(self, other: "FourierVector") -> "FourierVector":
        a, b = min(self.lo, other.lo), max(self.hi, other.hi)
        return FourierVector(a, self.window(a, b) - other.window(a, b))

    def __mul__(self, scalar) -> "FourierVector":
        return FourierVector(self.lo, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "FourierVector":
        return FourierVector(self.lo, -self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FourierVector):
            return NotImplemented
        return self.lo == other.lo and np.array_equal(self.coeffs, other.coeffs)

    def isclose(self, other: "FourierVector", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol * max(1.0, self.norm(), other.norm())

    def evaluate(self, z) -> np.ndarray:
        """Resum the window at points z on the unit circle."""
        z = np.asarray(z, dtype=complex)
        powers = np.power.outer(z, np.arange(self.lo, self.hi + 1))
        return powers @ self.coeffs

    @staticmethod
    def basis(n: int, value: complex = 1.0) -> "FourierVector":
        """The monomial value * z**n."""
        return FourierVector(n, np.array([value], dtype=complex))

    @staticmethod
    def zero() -> "FourierVector":
        return FourierVector(0, np.zeros(1, dtype=complex))

    @staticmethod
    def from_coeffs(lo: int, values) -> "FourierVector":
        return FourierVector(lo, np.asarray(values, dtype=complex))


@dataclass(frozen=True)
class FrequencyBand:
    """Inclusive frequency window used for interior-band comparisons."""

    n_min: int
    n_max: int

    def __post_init__(self):
        if self.n_min > self.n_max:
            raise ValueError(f"empty band [{self.n_min}, {self.n_max}]")

    def contains(self, f: FourierVector) -> bool:
        return self.n_min <= f.lo and f.hi <= self.n_max

    def shrink(self, margin: int) -> "FrequencyBand":
        return FrequencyBand(self.n_min + margin, self.n_max - margin)


@dataclass(frozen=True)
class ArcSet:
    """Disjoint union of arcs on the circle, parameterized by angle in [0, 2pi]."""

    arcs: tuple

    def __init__(self, arcs):
        pairs = sorted((float(a), float(b)) for a, b in arcs)
        for a, b in pairs:
            if not (0.0 <= a < b <= 2.0 * np.pi + 1e-15):
                raise ValueError(f"arc ({a}, {b}) not inside [0, 2pi] or empty")
        for (_, b0), (a1, _) in zip(pairs, pairs[1:]):
            if a1 < b0:
                raise ValueError("arcs overlap")
        object.__setattr__(self, "arcs", tuple(pairs))

    def measure(self) -> float:
        """Normalized arclength measure, in (0, 1]."""
        return sum(b - a for a, b in self.arcs) / (2.0 * np.pi)

    def indicator(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape)
        for a, b in self.arcs:
            out += ((t >= a) & (t < b)).astype(float)
        return out


def convolve(f: FourierVector, g: FourierVector) -> FourierVector:
    """Coefficients of the pointwise product f*g (full, untruncated)."""
    return FourierVector(f.lo + g.lo, np.convolve(f.coeffs, g.coeffs))


def project_plus(f: FourierVector) -> FourierVector:
    """Orthogonal projection onto the analytic part (frequencies n >= 0)."""
    if f.lo >= 0:
        return f
    if f.hi < 0:
        return FourierVector.zero()
    return FourierVector(0, f.coeffs[-f.lo :])


def project_minus(f: FourierVector) -> FourierVector:
    """Orthogonal projection onto frequencies n <= -1."""
    if f.hi < 0:
        return f
    if f.lo >= 0:
        return FourierVector.zero()
    return FourierVector(f.lo, f.coeffs[: -f.lo])


def flip_V(f: FourierVector) -> FourierVector:
    """The flip (Vf)(z) = conj(f(z))/z; coefficientwise n -> conj(c_{-n-1})."""
    return FourierVector(-f.hi - 1, np.conj(f.coeffs[::-1]))


def conjugate_Cu(f: FourierVector, u_coeffs: FourierVector) -> FourierVector:
    """Conjugation C_u f = u * conj(f)/z for an inner-function window u.

    Antilinear isometric involution exchanging u*H^2 and the anti-Hardy
    space.  Innerness of u is the caller's responsibility.
    """
    return convolve(u_coeffs, flip_V(f))


def arc_indicator_coeffs(E: ArcSet, N: int) -> FourierVector:
    """Fourier window [-N, N] of the indicator function of the arc set E.

    c_0 is the normalized measure; for n != 0 each arc [a, b) contributes
    (exp(-i n a) - exp(-i n b)) / (2 pi i n).
    """
    if N < 0:
        raise ValueError("window size N must be >= 0")
    n = np.arange(-N, N + 1)
    c = np.zeros(2 * N + 1, dtype=complex)
    c[N] = E.measure()
    nz = n != 0
    for a, b in E.arcs:
        c[nz] += (np.exp(-1j * n[nz] * a) - np.exp(-1j * n[nz] * b)) / (
            2j * np.pi * n[nz]
        )
    return FourierVector(-N, c)
