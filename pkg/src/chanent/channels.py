"""Noise operator, coordinate-subset conditioning, and channel samplers.

The noise operator convolves a function on F_2^n with the i.i.d.
Bernoulli(eps) flip distribution; it maps the distribution function of
X to that of X + Z.  Conditioning on a coordinate subset S averages
over the fibers of S and maps f_X to the marginal f_{X_S}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitspace import subset_coords
from .boolfn import dim_of


@dataclass(frozen=True)
class ChannelParams:
    """BSC crossover eps, BEC erasure eta, subset density lam."""

    eps: float = 0.0
    eta: float = 0.0
    lam: float = 0.0

    def __post_init__(self) -> None:
        for field_name in ("eps", "eta", "lam"):
            v = getattr(self, field_name)
            if not 0 <= v <= 1:
                raise ValueError(f"{field_name}={v} outside [0, 1]")


@dataclass(frozen=True)
class ErasurePattern:
    """BEC output: the mask of revealed coordinates and their values.

    ``bits`` carries the revealed coordinate values in place (erased
    coordinates are zeroed), so bits & revealed == bits.
    """

    n: int
    revealed: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits & ~self.revealed:
            raise ValueError("bits set outside the revealed mask")


def noise_operator(f: np.ndarray, eps: float) -> np.ndarray:
    """Exact convolution of f with i.i.d. Bernoulli(eps) coordinate flips.

    Applied one coordinate at a time; each step mixes f(x) with the
    value at x with that coordinate flipped, which multiplies out to
    the full eps^{|y|} (1-eps)^{n-|y|} kernel.
    """
    if not 0 <= eps <= 1:
        raise ValueError("eps must be in [0, 1]")
    f = np.asarray(f, dtype=float)
    n = dim_of(f)
    out = f.copy()
    for i in range(n):
        t = out.reshape(1 << (n - 1 - i), 2, 1 << i)
        out = ((1 - eps) * t + eps * t[:, ::-1, :]).reshape(-1)
    return out


def fwht(f: np.ndarray) -> np.ndarray:
    """In-place-style fast Walsh-Hadamard transform (unnormalized)."""
    f = np.asarray(f, dtype=float).copy()
    n = dim_of(f)
    for i in range(n):
        t = f.reshape(1 << (n - 1 - i), 2, 1 << i)
        a = t[:, 0, :].copy()
        b = t[:, 1, :].copy()
        t[:, 0, :] = a + b
        t[:, 1, :] = a - b
    return f


def noise_operator_fast(f: np.ndarray, eps: float) -> np.ndarray:
    """Spectral form of the noise operator.

    Transforms to the character basis, attenuates frequency s by
    (1-2*eps)^{|s|}, and transforms back.  Matches noise_operator to
    floating-point accuracy; that identity is enforced by tests, not
    assumed here.
    """
    if not 0 <= eps <= 1:
        raise ValueError("eps must be in [0, 1]")
    f = np.asarray(f, dtype=float)
    n = dim_of(f)
    rho = 1 - 2 * eps
    idx = np.arange(1 << n, dtype=np.uint64)
    atten = rho ** np.bitwise_count(idx).astype(float)
    spec = fwht(f) * atten
    return fwht(spec) / (1 << n)


def conditional_expectation(f: np.ndarray, mask: int, n: int | None = None) -> np.ndarray:
    """Average f over the fibers of the coordinate subset ``mask``.

    Returns a function on F_2^{|S|}, indexed per the project()
    convention (bit j of the index is the j-th smallest coordinate of
    the subset).  Preserves the mean.
    """
    f = np.asarray(f, dtype=float)
    fn = dim_of(f)
    if n is None:
        n = fn
    elif n != fn:
        raise ValueError(f"function has dimension {fn}, expected {n}")
    if not 0 <= mask < (1 << n):
        raise ValueError("subset mask out of range")
    coords = subset_coords(mask)
    # axis n-1-i of the reshaped tensor corresponds to coordinate i
    tensor = f.reshape((2,) * n)
    drop = tuple(n - 1 - i for i in range(n) if i not in coords)
    return tensor.mean(axis=drop).reshape(-1)


def bsc_sample(x: int, n: int, eps: float, rng: np.random.Generator) -> int:
    """Transmit x over BSC(eps): flip each coordinate independently."""
    if not 0 <= eps <= 1:
        raise ValueError("eps must be in [0, 1]")
    flips = rng.random(n) < eps
    z = 0
    for i in range(n):
        if flips[i]:
            z |= 1 << i
    return x ^ z


def bec_sample(x: int, n: int, eta: float, rng: np.random.Generator) -> ErasurePattern:
    """Transmit x over BEC(eta): erase each coordinate independently."""
    if not 0 <= eta <= 1:
        raise ValueError("eta must be in [0, 1]")
    keep = rng.random(n) >= eta
    mask = 0
    for i in range(n):
        if keep[i]:
            mask |= 1 << i
    return ErasurePattern(n=n, revealed=mask, bits=x & mask)


def sample_subset(lam: float, n: int, rng: np.random.Generator) -> int:
    """Random subset of [n] with i.i.d. inclusion probability lam."""
    if not 0 <= lam <= 1:
        raise ValueError("lam must be in [0, 1]")
    include = rng.random(n) < lam
    mask = 0
    for i in range(n):
        if include[i]:
            mask |= 1 << i
    return mask
