"""Model eigenfunctions of the normal-form blocks and their microlocalization.

Four block families are implemented:

* elliptic   u_e(y) = h^{-1/4} exp(-y^2/(2h)) H_n(y / sqrt(h))
* hyperbolic u_h(y) = |log h|^{-1/2} [c+ Y(y) + c- Y(-y)] |y|^{-1/2 + i s},
  s the fixed ratio of the spectral parameter to h
* complex hyperbolic, polar form on the transverse plane,
  u_ch(r,t) = |log h|^{-1/2} r^{-1 + i s1} e^{i k t}
* regular    u_reg(t) = e^{i m t} on a circle factor

The Gaussian weight exp(-y^2/(2h)) is the one that makes u_e an exact
eigenfunction of h^2 D^2 + y^2 and a fixed vector (up to the (-i)^n phase)
of the h-Fourier transform; evaluation at the hyperbolic / radial singular
point returns 0 (measure-zero convention, quadrature grids avoid it).

Microlocalization applies the sandwich chi(x) . chi(h D) . chi(y) axis by
axis (radially in a complex-hyperbolic pair), which is the quantization of
the triple product cutoff for these separable symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .bumps import DEFAULT_EPS, Cutoff, bump
from .errors import RangeError, ResolutionError
from .grids import GridFunction, freq_axis, l2_norm


class BlockKind(Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    COMPLEX_HYPERBOLIC = "complex_hyperbolic"
    REGULAR = "regular"


@dataclass(frozen=True)
class BlockSpec:
    """One normal-form factor of a model quasimode.

    Only the fields of the active kind are meaningful:
      elliptic: n (Hermite index);  hyperbolic: s, c_plus, c_minus;
      complex hyperbolic: s1 (radial ratio) and angular integer k
      (the angular ratio s2 equals k for a single-valued mode);
      regular: m (Fourier mode).
    Stored ratios are h-independent constants, which is the admissible
    O(h) window for the underlying spectral parameters.
    """

    kind: BlockKind
    n: int = 0
    s: float = 0.0
    c_plus: complex = 1.0 + 0j
    c_minus: complex = 0.0 + 0j
    s1: float = 0.0
    k: int = 0
    m: int = 0

    def __post_init__(self):
        if self.kind == BlockKind.ELLIPTIC:
            if self.n < 0 or self.n > 200:
                raise ValueError("elliptic index must satisfy 0 <= n <= 200")
        if self.kind == BlockKind.HYPERBOLIC:
            w = abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2
            if abs(w - 1.0) > 1e-12:
                raise ValueError(f"|c+|^2 + |c-|^2 = {w}, must be 1 within 1e-12")
            if abs(self.s) > 50:
                raise ValueError("hyperbolic ratio out of the admissible window")
        if self.kind == BlockKind.COMPLEX_HYPERBOLIC and abs(self.s1) > 50:
            raise ValueError("complex-hyperbolic ratio out of the admissible window")

    @property
    def s2(self) -> float:
        """Angular ratio of the loxodromic factor; equals k exactly."""
        return float(self.k)

    @property
    def dim(self) -> int:
        return 2 if self.kind == BlockKind.COMPLEX_HYPERBOLIC else 1

    @staticmethod
    def elliptic(n: int) -> "BlockSpec":
        return BlockSpec(BlockKind.ELLIPTIC, n=n)

    @staticmethod
    def hyperbolic(s: float, c_plus: complex = 1.0, c_minus: complex = 0.0) -> "BlockSpec":
        return BlockSpec(BlockKind.HYPERBOLIC, s=s, c_plus=c_plus, c_minus=c_minus)

    @staticmethod
    def complex_hyperbolic(s1: float, k: int) -> "BlockSpec":
        return BlockSpec(BlockKind.COMPLEX_HYPERBOLIC, s1=s1, k=k)

    @staticmethod
    def regular(m: int) -> "BlockSpec":
        return BlockSpec(BlockKind.REGULAR, m=m)


@dataclass(frozen=True)
class QuasimodeSpec:
    """Ordered tensor product of blocks at a common hbar."""

    blocks: tuple
    hbar: float

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not 0.0 < self.hbar < 1.0:
            raise ValueError("hbar must lie in (0, 1)")
        if not self.blocks:
            raise ValueError("at least one block required")

    @property
    def counts(self) -> tuple[int, int, int, int]:
        """(H, L, E, ell): hyperbolic, complex-hyperbolic, elliptic, regular."""
        h = sum(1 for b in self.blocks if b.kind == BlockKind.HYPERBOLIC)
        ll = sum(1 for b in self.blocks if b.kind == BlockKind.COMPLEX_HYPERBOLIC)
        e = sum(1 for b in self.blocks if b.kind == BlockKind.ELLIPTIC)
        r = sum(1 for b in self.blocks if b.kind == BlockKind.REGULAR)
        return h, ll, e, r

    @property
    def dims(self) -> tuple[int, int]:
        """(n_total, ell); n_total = ell + H + 2L + E."""
        h, ll, e, r = self.counts
        return r + h + 2 * ll + e, r


def hermite_poly(n: int, x):
    """Physicists' Hermite polynomial H_n by the three-term recurrence.

    H_{n+1} = 2 x H_n - 2 n H_{n-1}; overflow raises RangeError.
    """
    if n < 0 or n > 200:
        raise RangeError(f"hermite index {n} outside [0, 200]")
    x = np.asarray(x, dtype=float)
    hm = np.zeros_like(x)
    hc = np.ones_like(x)
    for j in range(n):
        hm, hc = hc, 2.0 * x * hc - 2.0 * j * hm
    if not np.all(np.isfinite(hc)):
        raise RangeError(f"H_{n} overflowed at |x| up to {np.max(np.abs(x))}")
    return hc if hc.ndim else float(hc)


def _log_factor(hbar: float) -> float:
    return 1.0 / math.sqrt(abs(math.log(hbar)))


def eval_block(block: BlockSpec, hbar: float, point):
    """Raw model eigenfunction value of a single block.

    ``point`` has one coordinate for elliptic / hyperbolic / regular blocks
    and two Cartesian coordinates (y1, y2) for a complex-hyperbolic block.
    Values at the exact singular point (y = 0, r = 0) are 0 by convention.
    """
    pt = np.atleast_1d(np.asarray(point, dtype=float))
    if block.kind == BlockKind.COMPLEX_HYPERBOLIC:
        if pt.shape[0] != 2:
            raise ValueError("complex-hyperbolic block takes two coordinates")
        r = np.hypot(pt[0], pt[1])
        theta = np.arctan2(pt[1], pt[0])
        return eval_block_polar(block, hbar, r, theta)
    if pt.shape[0] != 1:
        raise ValueError(f"{block.kind.value} block takes one coordinate")
    y = pt[0]
    if block.kind == BlockKind.ELLIPTIC:
        return complex(
            hbar**-0.25
            * np.exp(-y * y / (2.0 * hbar))
            * hermite_poly(block.n, y / math.sqrt(hbar))
        )
    if block.kind == BlockKind.REGULAR:
        return complex(np.exp(1j * block.m * y))
    # hyperbolic
    if y == 0.0:
        return 0.0 + 0.0j
    amp = _log_factor(hbar) * abs(y) ** -0.5
    osc = np.exp(1j * block.s * math.log(abs(y)))
    c = block.c_plus if y > 0 else block.c_minus
    return complex(c * amp * osc)


def eval_block_polar(block: BlockSpec, hbar: float, r, theta):
    """Complex-hyperbolic block in its native polar variables."""
    if block.kind != BlockKind.COMPLEX_HYPERBOLIC:
        raise ValueError("polar evaluation is for complex-hyperbolic blocks")
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    out = np.zeros(np.broadcast(r, theta).shape, dtype=complex)
    rb = np.broadcast_to(r, out.shape)
    tb = np.broadcast_to(theta, out.shape)
    pos = rb > 0.0
    with np.errstate(divide="ignore"):
        out[pos] = (
            _log_factor(hbar)
            * rb[pos] ** -1.0
            * np.exp(1j * (block.s1 * np.log(rb[pos]) + block.k * tb[pos]))
        )
    return out if out.ndim else complex(out)


def eval_product(spec: QuasimodeSpec, point) -> complex:
    """Product of block values; coordinates are consumed in block order."""
    pt = np.atleast_1d(np.asarray(point, dtype=float))
    n_total, _ = spec.dims
    if pt.shape[0] != n_total:
        raise ValueError(f"point has {pt.shape[0]} coordinates, spec needs {n_total}")
    val = 1.0 + 0.0j
    i = 0
    for b in spec.blocks:
        val *= eval_block(b, spec.hbar, pt[i : i + b.dim])
        i += b.dim
    return complex(val)


# ---------------------------------------------------------------------------
# Microlocalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Uniform evaluation grid: per-axis origin, spacing and point count."""

    origin: np.ndarray
    spacing: np.ndarray
    shape: tuple

    def __post_init__(self):
        object.__setattr__(self, "origin", np.atleast_1d(np.asarray(self.origin, float)))
        object.__setattr__(self, "spacing", np.atleast_1d(np.asarray(self.spacing, float)))
        object.__setattr__(self, "shape", tuple(int(s) for s in np.atleast_1d(self.shape)))

    def axis(self, a: int) -> np.ndarray:
        return self.origin[a] + self.spacing[a] * np.arange(self.shape[a])


def block_required_spacing(block: BlockSpec, hbar: float, eps: float = DEFAULT_EPS) -> float:
    """Grid step needed to resolve a block's oscillation and the xi cutoff."""
    band = np.pi * hbar / (4.0 * eps)  # resolve cutoff frequencies up to eps
    if block.kind == BlockKind.ELLIPTIC:
        own = math.sqrt(hbar) / (4.0 * math.sqrt(block.n + 1.0))
    elif block.kind == BlockKind.HYPERBOLIC:
        own = hbar / (4.0 * (1.0 + abs(block.s)))
    elif block.kind == BlockKind.COMPLEX_HYPERBOLIC:
        own = hbar / (4.0 * (1.0 + abs(block.s1) + abs(block.k)))
    else:  # regular: wavelength 2 pi / m on the circle
        own = 2.0 * np.pi / (8.0 * (1.0 + abs(block.m)))
    return min(band, own)


def default_grid(spec: QuasimodeSpec, eps: float = DEFAULT_EPS, pad: float = 2.0) -> GridSpec:
    """A grid adequate for microlocalizing ``spec`` with O(1)-scale cutoffs."""
    origins, spacings, shape = [], [], []
    for b in spec.blocks:
        d = block_required_spacing(b, spec.hbar, eps)
        if b.kind == BlockKind.REGULAR:
            n = int(2 ** math.ceil(math.log2(2.0 * np.pi / d)))
            origins.append(-np.pi)
            spacings.append(2.0 * np.pi / n)
            shape.append(n)
        else:
            half = pad * eps
            n = int(2 ** math.ceil(math.log2(2.0 * half / d)))
            step = 2.0 * half / n
            for _ in range(b.dim):
                origins.append(-half + 0.5 * step)  # offset grid avoids 0
                spacings.append(step)
                shape.append(n)
    return GridSpec(np.array(origins), np.array(spacings), tuple(shape))


def _multiplier_1d(values: np.ndarray, axis: int, mult: np.ndarray) -> np.ndarray:
    sh = [1] * values.ndim
    sh[axis] = values.shape[axis]
    return np.fft.ifft(np.fft.fft(values, axis=axis) * mult.reshape(sh), axis=axis)


def microlocalize(
    spec: QuasimodeSpec,
    cutoff: Cutoff | None = None,
    grid: GridSpec | None = None,
    normalize: bool = False,
) -> GridFunction:
    """Op_h( chi(x) chi(y) chi(xi) ) applied to the model product.

    Separable cutoffs act axis by axis: multiply by chi(y), apply the
    Fourier multiplier chi(h D), multiply by chi(x).  For a complex
    hyperbolic pair the position and frequency cutoffs are radial (the
    loxodromic normal form is rotation invariant, so its natural cutoffs
    are).  With ``normalize`` the output is rescaled to unit L^2 norm.
    """
    if cutoff is None:
        cutoff = Cutoff()
    if grid is None:
        grid = default_grid(spec, cutoff.epsilon)
    h = spec.hbar
    eps = cutoff.epsilon

    axes_of_block = []
    i = 0
    for b in spec.blocks:
        axes_of_block.append(tuple(range(i, i + b.dim)))
        i += b.dim
    ndim = i
    if len(grid.shape) != ndim:
        raise ValueError("grid dimension does not match the spec")
    for b, axs in zip(spec.blocks, axes_of_block):
        need = block_required_spacing(b, h, eps)
        for a in axs:
            if grid.spacing[a] > need * (1.0 + 1e-12):
                raise ResolutionError(
                    f"axis {a}: spacing {grid.spacing[a]:g} exceeds required {need:g}"
                )

    axes = [grid.axis(a) for a in range(ndim)]
    if ndim == 1:
        coords = [axes[0]]
    else:
        coords = np.meshgrid(*axes, indexing="ij")

    # evaluate the raw product on the grid, block by block
    vals = np.ones(tuple(grid.shape), dtype=complex)
    for b, axs in zip(spec.blocks, axes_of_block):
        if b.kind == BlockKind.COMPLEX_HYPERBOLIC:
            r = np.hypot(coords[axs[0]], coords[axs[1]])
            th = np.arctan2(coords[axs[1]], coords[axs[0]])
            vals = vals * eval_block_polar(b, h, r, th)
        elif b.kind == BlockKind.ELLIPTIC:
            y = coords[axs[0]]
            vals = vals * (
                h**-0.25 * np.exp(-(y**2) / (2.0 * h)) * hermite_poly(b.n, y / math.sqrt(h))
            )
        elif b.kind == BlockKind.REGULAR:
            vals = vals * np.exp(1j * b.m * coords[axs[0]])
        else:
            y = coords[axs[0]]
            amp = np.zeros_like(y, dtype=complex)
            nz = y != 0.0
            with np.errstate(divide="ignore"):
                amp[nz] = np.abs(y[nz]) ** -0.5 * np.exp(1j * b.s * np.log(np.abs(y[nz])))
            vals = vals * _log_factor(h) * np.where(y > 0, b.c_plus, b.c_minus) * amp

    # sandwich chi(x) chi(hD) chi(y), radially on CH pairs
    for b, axs in zip(spec.blocks, axes_of_block):
        if b.kind == BlockKind.COMPLEX_HYPERBOLIC:
            r = np.hypot(coords[axs[0]], coords[axs[1]])
            chi_r = bump(r, eps)
            vals = vals * chi_r
            f1 = freq_axis(grid.shape[axs[0]], grid.spacing[axs[0]], h)
            f2 = freq_axis(grid.shape[axs[1]], grid.spacing[axs[1]], h)
            rho = np.hypot(f1[:, None], f2[None, :])
            sh = [1] * ndim
            sh[axs[0]] = grid.shape[axs[0]]
            sh[axs[1]] = grid.shape[axs[1]]
            ft = np.fft.fft2(vals, axes=axs)
            vals = np.fft.ifft2(ft * bump(rho, eps).reshape(sh), axes=axs)
            vals = vals * chi_r
        else:
            a = axs[0]
            x = coords[a] if ndim > 1 else axes[a]
            if b.kind == BlockKind.REGULAR:
                # wrap the circle coordinate into [-pi, pi) around the orbit point
                x = (x + np.pi) % (2.0 * np.pi) - np.pi
            chi_x = bump(x, eps)
            vals = vals * chi_x
            mult = bump(freq_axis(grid.shape[a], grid.spacing[a], h), eps)
            vals = _multiplier_1d(vals, a, mult)
            vals = vals * chi_x

    out = GridFunction(vals, grid.origin, grid.spacing, h)
    if normalize:
        nrm = l2_norm(out)
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero function")
        out = out.copy_with(out.values / nrm)
    return out
