"""Finite-section matrix models of the circle operators.

Every operator is a dense complex matrix tagged with the frequency basis
of its rows and columns.  Conventions:

* analytic window ("hplus"): slot k holds frequency k, k = 0..N;
* anti-analytic window ("hminus"): slot k holds frequency -(k+1), k = 0..N-1;
* model-space window ("ku"): same slots as hplus, vectors understood to
  lie in K_u = H^2 minus u H^2;
* block window ("kuperp_block"): N+1 analytic slots followed by N
  anti-analytic slots, written in the coordinates that the unitary
  diag(M_u, I) pulls back from u H^2 + H^2_-.

Antilinear maps (the flip and the conjugation) are never materialized as
matrices; identities involving them are checked by application.
"""

from dataclasses import dataclass, field

import numpy as np

from .blaschke import BlaschkeProduct
from .fourier import FourierVector, convolve, project_minus, project_plus

_KINDS = ("hplus", "hminus", "ku", "kuperp_block")


@dataclass(frozen=True)
class BasisTag:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("window size must be >= 0")

    @property
    def dim(self) -> int:
        if self.kind in ("hplus", "ku"):
            return self.n + 1
        if self.kind == "hminus":
            return self.n
        return 2 * self.n + 1


def hplus(n):
    return BasisTag("hplus", n)


def hminus(n):
    return BasisTag("hminus", n)


def ku_window(n):
    return BasisTag("ku", n)


def kuperp_block(n):
    return BasisTag("kuperp_block", n)


@dataclass(frozen=True)
class OperatorMatrix:
    rows: BasisTag
    cols: BasisTag
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (self.rows.dim, self.cols.dim):
            raise ValueError(
                f"entries shape {m.shape} does not match tags "
                f"({self.rows.dim}, {self.cols.dim})"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def shape(self):
        return self.entries.shape

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.cols, self.rows, self.entries.conj().T)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.cols != other.rows:
            raise ValueError(f"basis mismatch: {self.cols} vs {other.rows}")
        return OperatorMatrix(self.rows, other.cols, self.entries @ other.entries)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("basis mismatch in sum")
        return OperatorMatrix(self.rows, self.cols, self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("basis mismatch in difference")
        return OperatorMatrix(self.rows, self.cols, self.entries - other.entries)

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.entries @ np.asarray(x, dtype=complex)


# ---------------------------------------------------------------------------
# window <-> FourierVector conversions
# ---------------------------------------------------------------------------


def to_window(f: FourierVector, tag: BasisTag, u_coeffs: FourierVector | None = None):
    n = tag.n
    if tag.kind in ("hplus", "ku"):
        return f.window(0, n)
    if tag.kind == "hminus":
        return f.window(-n, -1)[::-1].copy()
    if u_coeffs is None:
        raise ValueError("block window conversion needs the coefficients of u")
    top = project_plus(convolve(u_coeffs.conj(), f)).window(0, n)
    bottom = project_minus(f).window(-n, -1)[::-1].copy()
    return np.concatenate([top, bottom])


def from_window(x, tag: BasisTag, u_coeffs: FourierVector | None = None):
    x = np.asarray(x, dtype=complex)
    if x.shape != (tag.dim,):
        raise ValueError(f"vector length {x.shape} does not match {tag}")
    n = tag.n
    if tag.kind in ("hplus", "ku"):
        return FourierVector(0, x)
    if tag.kind == "hminus":
        return FourierVector(-n, x[::-1])
    if u_coeffs is None:
        raise ValueError("block window conversion needs the coefficients of u")
    f = FourierVector(0, x[: n + 1])
    g = FourierVector(-n, x[n + 1 :][::-1]) if n else FourierVector.zero()
    return convolve(u_coeffs, f) + g


# ---------------------------------------------------------------------------
# matrix builders
# ---------------------------------------------------------------------------


def toeplitz(phi: FourierVector, N: int) -> OperatorMatrix:
    """Compression of multiplication by phi to the analytic window."""
    c = phi.window(-N, N)
    j, k = np.meshgrid(np.arange(N + 1), np.arange(N + 1), indexing="ij")
    return OperatorMatrix(hplus(N), hplus(N), c[N + j - k])


def hankel(phi: FourierVector, N: int) -> OperatorMatrix:
    """Anti-analytic part of multiplication by phi on the analytic window."""
    if N == 0:
        return OperatorMatrix(hminus(0), hplus(0), np.zeros((0, 1)))
    w = phi.window(-(2 * N + 1), -1)
    a, k = np.meshgrid(np.arange(N), np.arange(N + 1), indexing="ij")
    return OperatorMatrix(hminus(N), hplus(N), w[2 * N - a - k])


def dual_toeplitz(phi: FourierVector, N: int) -> OperatorMatrix:
    """Compression of multiplication by phi to the anti-analytic window."""
    if N == 0:
        return OperatorMatrix(hminus(0), hminus(0), np.zeros((0, 0)))
    c = phi.window(-(N - 1), N - 1)
    a, b = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    return OperatorMatrix(hminus(N), hminus(N), c[b - a + N - 1])


def analytic_from_minus(phi: FourierVector, N: int) -> OperatorMatrix:
    """Analytic part of multiplication by phi on the anti-analytic window."""
    if N == 0:
        return OperatorMatrix(hplus(0), hminus(0), np.zeros((1, 0)))
    w = phi.window(0, 2 * N)
    j, a = np.meshgrid(np.arange(N + 1), np.arange(N), indexing="ij")
    return OperatorMatrix(hplus(N), hminus(N), w[j + a + 1])


def model_projection(u: BlaschkeProduct, N: int, eps: float = 1e-14) -> OperatorMatrix:
    """Projection onto K_u on the analytic window: I - T_u T_u^*."""
    Tu = toeplitz(u.coeffs(eps), N)
    P = np.eye(N + 1) - Tu.entries @ Tu.entries.conj().T
    return OperatorMatrix(hplus(N), hplus(N), P)


def tto(phi: FourierVector, u: BlaschkeProduct, N: int, eps: float = 1e-14):
    """Truncated Toeplitz operator: compression of M_phi to the model space."""
    P = model_projection(u, N, eps)
    A = P.entries @ toeplitz(phi, N).entries @ P.entries
    return OperatorMatrix(ku_window(N), ku_window(N), A)


def dtto_block(phi: FourierVector, u_coeffs: FourierVector, N: int) -> OperatorMatrix:
    """Block model of the dual truncated Toeplitz operator.

    In the coordinates pulled back by diag(M_u, I) the operator is the
    two-by-two matrix with Toeplitz and dual-Toeplitz diagonal blocks and
    Hankel off-diagonal blocks with symbols u*conj(phi) and u*phi.
    """
    TL = toeplitz(phi, N).entries
    TR = hankel(convolve(u_coeffs, phi.conj()), N).entries.conj().T
    BL = hankel(convolve(u_coeffs, phi), N).entries
    BR = dual_toeplitz(phi, N).entries
    return OperatorMatrix(
        kuperp_block(N), kuperp_block(N), np.block([[TL, TR], [BL, BR]])
    )


def dtto_direct(
    phi: FourierVector, u_coeffs: FourierVector, h: FourierVector
) -> FourierVector:
    """Apply the dual truncated Toeplitz operator by its displayed formula.

    D_phi h = (I - P_+)(phi h) + u P_+(conj(u) phi h); the two summands
    are orthogonal (anti-analytic and inside u H^2 respectively).
    """
    p = convolve(phi, h)
    minus = project_minus(p)
    inside = convolve(u_coeffs, project_plus(convolve(u_coeffs.conj(), p)))
    return minus + inside


def apply_PKu(f: FourierVector, u_coeffs: FourierVector) -> FourierVector:
    """Model-space projection at the coefficient level: P_+ f - u P_+(conj(u) f)."""
    plus = project_plus(f)
    return plus - convolve(u_coeffs, project_plus(convolve(u_coeffs.conj(), plus)))


def truncated_hankel_B(
    phi: FourierVector, u: BlaschkeProduct, N: int, eps: float = 1e-14
) -> OperatorMatrix:
    """Big truncated Hankel operator from the model-space window into the block.

    Sends f in K_u to (I - P_{K_u})(phi f), written in block coordinates:
    top block P_+(conj(u) phi f), bottom block (I - P_+)(phi f).
    """
    uc = u.coeffs(eps)
    top = toeplitz(convolve(uc.conj(), phi), N).entries
    bottom = hankel(phi, N).entries
    return OperatorMatrix(
        kuperp_block(N), ku_window(N), np.vstack([top, bottom])
    )


def truncated_hankel_B_adjoint(
    phi: FourierVector, u: BlaschkeProduct, N: int, eps: float = 1e-14
) -> OperatorMatrix:
    """Adjoint of the big truncated Hankel operator: w -> P_{K_u}(conj(phi) w)."""
    uc = u.coeffs(eps)
    P = model_projection(u, N, eps).entries
    top = P @ toeplitz(convolve(uc, phi.conj()), N).entries
    bottom = P @ analytic_from_minus(phi.conj(), N).entries
    return OperatorMatrix(
        ku_window(N), kuperp_block(N), np.hstack([top, bottom])
    )


# ---------------------------------------------------------------------------
# spectral extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalSubspace:
    """Top singular-vector cluster of a finite section.

    gap is the distance from sigma_max to the first singular value below
    the cluster (sigma_max itself when the cluster is the whole space).
    """

    sigma_max: float
    basis: np.ndarray = field(repr=False)
    gap: float
    cols: BasisTag


def operator_norm(M: OperatorMatrix) -> float:
    if 0 in M.shape:
        return 0.0
    return float(np.linalg.svd(M.entries, compute_uv=False)[0])


def extremal_space(M: OperatorMatrix, tol: float | None = None) -> ExtremalSubspace:
    _, s, vh = np.linalg.svd(M.entries)
    sigma = float(s[0]) if len(s) else 0.0
    if tol is None:
        tol = 1e-8 * max(sigma, 1e-300)
    inside = s >= sigma - tol
    below = s[~inside]
    gap = float(sigma - below[0]) if len(below) else sigma
    return ExtremalSubspace(sigma, vh[inside].conj().T.copy(), gap, M.cols)
