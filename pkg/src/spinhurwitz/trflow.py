"""Finite-dimensional time-reversal invariant paths A(t) = D + tR.

Complex vectors in C^n are stored as real 2n-vectors ``(x1, y1, x2, y2, ...)``
with ``z_j = x_j + i y_j``; the complex structure is ``J = blockdiag([[0,-1],[1,0]])``.
D is complex linear (JD = DJ), R is conjugate linear (JR = -RJ), so
``A(-t) = J A(t) J^-1``. Determinants are taken with domain and target in the same
basis, so the determinant of an invertible complex-linear map is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.stats import ortho_group

from .errors import HypothesisFailed, OddRealKernel, SingularAtEvaluation

ZERO_THRESHOLD = 1e-9
GAP_FACTOR = 1e3
BLOCK_TAGS = ("invertible", "kernel")


def complex_structure(n: int) -> np.ndarray:
    return np.kron(np.eye(n), np.array([[0.0, -1.0], [1.0, 0.0]]))


def realify_linear(M: np.ndarray) -> np.ndarray:
    """Real 2n x 2n matrix of z -> M z."""
    M = np.asarray(M, dtype=complex)
    blocks = np.empty(M.shape + (2, 2))
    blocks[..., 0, 0] = M.real
    blocks[..., 0, 1] = -M.imag
    blocks[..., 1, 0] = M.imag
    blocks[..., 1, 1] = M.real
    return blocks.transpose(0, 2, 1, 3).reshape(2 * M.shape[0], 2 * M.shape[1])


def realify_antilinear(M: np.ndarray) -> np.ndarray:
    """Real 2n x 2n matrix of z -> M conj(z)."""
    conj = np.kron(np.eye(M.shape[1]), np.diag([1.0, -1.0]))
    return realify_linear(M) @ conj


@dataclass(frozen=True)
class TRFamily:
    J: np.ndarray
    D: np.ndarray
    R: np.ndarray
    geometric: bool = False
    blocks: tuple[str, ...] = ()
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.J.shape[0] // 2

    def __call__(self, t: float) -> np.ndarray:
        return self.D + t * self.R

    def tr_residual(self, t: float) -> float:
        Jinv = -self.J
        return float(np.linalg.norm(self(-t) - self.J @ self(t) @ Jinv))

    def commutation_residuals(self) -> dict[str, float]:
        J, D, R = self.J, self.D, self.R
        out = {
            "JJ+I": float(np.linalg.norm(J @ J + np.eye(len(J)))),
            "JD-DJ": float(np.linalg.norm(J @ D - D @ J)),
            "JR+RJ": float(np.linalg.norm(J @ R + R @ J)),
        }
        if self.geometric:
            RtR = R.T @ R
            c = float(np.trace(RtR)) / len(RtR)
            out["DtR+RtD"] = float(np.linalg.norm(D.T @ R + R.T @ D))
            out["RtR-cI"] = float(np.linalg.norm(RtR - c * np.eye(len(RtR))))
        return out

    def r_constant(self) -> float:
        """c with R^T R = c I (meaningful for geometric families)."""
        return float(np.trace(self.R.T @ self.R)) / (2 * self.n)

    def kernel_blocks(self) -> int:
        return sum(1 for b in self.blocks if b == "kernel")


def make_block_family(block_spec: Sequence[str], scale: float = 1.0, seed: int | None = None) -> TRFamily:
    """Direct sum of model blocks, optionally conjugated by a random orthogonal matrix.

    ``invertible``: on C^2, D = diag(1, -1), R(z1, z2) = a (conj z2, conj z1).
    ``kernel``:     on C^1, D = 0,           R(z) = a conj z.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    Ds, Rs = [], []
    for tag in block_spec:
        if tag == "invertible":
            Ds.append(np.diag([1.0, -1.0]).astype(complex))
            Rs.append(scale * np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))
        elif tag == "kernel":
            Ds.append(np.zeros((1, 1), dtype=complex))
            Rs.append(np.array([[scale]], dtype=complex))
        else:
            raise ValueError(f"unknown block tag {tag!r}; expected one of {BLOCK_TAGS}")
    n = sum(len(b) for b in Ds)
    if n == 0:
        raise ValueError("block_spec must not be empty")
    Dc = np.zeros((n, n), dtype=complex)
    Rc = np.zeros((n, n), dtype=complex)
    i = 0
    for Db, Rb in zip(Ds, Rs):
        k = len(Db)
        Dc[i:i + k, i:i + k] = Db
        Rc[i:i + k, i:i + k] = Rb
        i += k
    J = complex_structure(n)
    D = realify_linear(Dc)
    R = realify_antilinear(Rc)
    if seed is not None:
        Q = ortho_group.rvs(2 * n, random_state=np.random.default_rng(seed))
        J, D, R = Q @ J @ Q.T, Q @ D @ Q.T, Q @ R @ Q.T
    return TRFamily(J, D, R, geometric=True, blocks=tuple(block_spec), seed=seed)


@dataclass
class SFResult:
    sign: int
    method: str
    kernel_dim_complex: int | None = None
    min_singular_value_along_path: float = float("nan")
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.sign in (1, -1)


def _min_sv(A: np.ndarray) -> float:
    return float(np.linalg.svd(A, compute_uv=False)[-1])


def sf_by_determinant(f: TRFamily, t_max: float = 10.0, samples: int = 32) -> SFResult:
    """Sign of det A(t_max); requires A(t) invertible on [t_max, 2 t_max]."""
    if t_max <= 0 or samples < 1:
        raise ValueError("t_max and samples must be positive")
    ts = np.linspace(t_max, 2 * t_max, samples)
    smin = min(_min_sv(f(t)) for t in ts)
    if smin <= ZERO_THRESHOLD:
        raise SingularAtEvaluation(f"A(t) has singular value {smin:.3e} on [{t_max}, {2 * t_max}]")
    sign, _ = np.linalg.slogdet(f(t_max))
    return SFResult(int(sign), "by-determinant", None, smin)


def sf_by_kernel(f: TRFamily) -> SFResult:
    """(-1)^{dim_C ker A(0)}, provided R maps ker A(0) isomorphically onto coker A(0)."""
    U, s, Vt = np.linalg.svd(f(0.0))
    small = s < ZERO_THRESHOLD
    big = s[~small]
    if big.size and small.any() and big.min() < GAP_FACTOR * ZERO_THRESHOLD:
        raise HypothesisFailed(f"no clean spectral gap at t = 0: smallest nonzero singular value {big.min():.3e}")
    real_dim = int(small.sum())
    if real_dim % 2:
        raise OddRealKernel(f"real kernel dimension {real_dim} is odd")
    if real_dim:
        K = Vt[small].T
        C = U[:, small]
        B = C.T @ f.R @ K
        bmin = _min_sv(B)
        if bmin <= ZERO_THRESHOLD:
            raise HypothesisFailed(f"R restricted to ker A(0) is not an isomorphism (sv {bmin:.3e})")
    else:
        bmin = float("inf")
    sign = -1 if (real_dim // 2) % 2 else 1
    return SFResult(sign, "by-kernel", real_dim // 2, float(s[-1]), {"restriction_min_sv": bmin})


def vanishing_check(f: TRFamily, t_grid: Sequence[float], n_vectors: int = 100, seed: int = 0) -> dict:
    """Check |A(t)x|^2 = |Dx|^2 + t^2 |Rx|^2 and the lower bound sigma_min(A(t)) >= sqrt(c) |t|."""
    if not f.geometric:
        raise ValueError("vanishing_check needs a geometric family")
    rng = np.random.default_rng(seed)
    c = f.r_constant()
    X = rng.standard_normal((2 * f.n, n_vectors))
    X /= np.linalg.norm(X, axis=0)
    rows = []
    worst_residual = 0.0
    bound_ok = True
    for t in t_grid:
        A = f(t)
        lhs = np.sum((A @ X) ** 2, axis=0)
        rhs = np.sum((f.D @ X) ** 2, axis=0) + t**2 * np.sum((f.R @ X) ** 2, axis=0)
        resid = float(np.max(np.abs(lhs - rhs)))
        smin = _min_sv(A)
        bound = np.sqrt(c) * abs(t)
        ok = smin >= bound * (1 - 1e-9) - 1e-12
        bound_ok &= ok
        worst_residual = max(worst_residual, resid)
        rows.append({"t": float(t), "min_sv": smin, "lower_bound": float(bound), "bound_ok": bool(ok),
                     "identity_residual": resid})
    return {"c": c, "rows": rows, "max_identity_residual": worst_residual, "all_bounds_ok": bool(bound_ok)}


def interpolate_scale(block_spec: Sequence[str], a0: float, a1: float, steps: int = 11,
                      seed: int | None = None, t_max: float = 10.0) -> list[int]:
    """SF along the straight line of R-scales from a0 to a1 (both > 0)."""
    signs = []
    for s in np.linspace(0.0, 1.0, steps):
        f = make_block_family(block_spec, (1 - s) * a0 + s * a1, seed=seed)
        signs.append(sf_by_determinant(f, t_max).sign)
    return signs


def trflow_report(block_spec: Sequence[str], seed: int | None = None, t_max: float = 10.0,
                  scale: float = 1.0) -> dict:
    f = make_block_family(block_spec, scale, seed=seed)
    det = sf_by_determinant(f, t_max)
    ker = sf_by_kernel(f)
    grid = np.linspace(-t_max, t_max, 11)
    van = vanishing_check(f, grid, seed=seed or 0)
    return {
        "blocks": list(block_spec),
        "seed": seed,
        "scale": scale,
        "t_max": t_max,
        "sf_det": det.sign,
        "sf_ker": ker.sign,
        "kernel_dim_complex": ker.kernel_dim_complex,
        "min_sv_path": det.min_singular_value_along_path,
        "residuals": {
            "tr_invariance": max(f.tr_residual(t) for t in grid),
            "vanishing_identity": van["max_identity_residual"],
            **f.commutation_residuals(),
        },
    }
