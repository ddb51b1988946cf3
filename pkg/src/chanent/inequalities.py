"""Numerical verifiers for the noisy-entropy inequalities.

Each check returns a SlackReport with signed slack = RHS - LHS in
bits; the underlying theorems guarantee slack >= 0, so any slack below
-1e-9 indicates an implementation bug rather than a near-violation.
"""

from __future__ import annotations

import math
from collections import OrderedDict
from dataclasses import dataclass, field

import numpy as np

from .bitspace import Code
from .boolfn import binary_entropy, ent, from_code, h_q, norm_q, renyi_entropy_of_function
from .channels import noise_operator
from .entropy_analysis import (
    cond_entropy_bec,
    cond_entropy_bsc,
    subset_entropy_expectation,
    subset_weights,
)

TOLERANCE = 1e-9


class HypothesisViolation(ValueError):
    """Raised when a check is called outside its theorem's hypotheses."""


@dataclass(frozen=True)
class SlackReport:
    inequality: str
    params: dict = field(compare=False)
    lhs: float = 0.0
    rhs: float = 0.0

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.slack >= -TOLERANCE

    def to_dict(self) -> dict:
        row = {"inequality": self.inequality}
        row.update(self.params)
        row.update({
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "pass": self.passed,
        })
        return row


# ---------------------------------------------------------------------------
# Per-subset quantities of a general nonnegative f, cached across the
# epsilon grid (the subset values do not depend on eps, only the
# weights do).

_MAX_CACHED = 8
_subset_cache: OrderedDict[bytes, dict] = OrderedDict()


def _subset_stats(f: np.ndarray, qs: tuple[int, ...]) -> dict:
    """log2 ||E(f|S)||_q for each requested q, and Ent[E(f|S)], all S."""
    f = np.asarray(f, dtype=float)
    key = f.tobytes()
    entry = _subset_cache.get(key)
    if entry is None:
        entry = {}
    missing = [q for q in qs if ("norm", q) not in entry]
    if not missing and "ent" in entry:
        _subset_cache.move_to_end(key)
        return entry
    n = int(len(f)).bit_length() - 1
    size = 1 << n
    norm_sums = {q: np.empty(size) for q in missing}
    ent_sums = np.empty(size)

    # Divide and conquer on the top remaining coordinate: leaving it out
    # of S averages the two halves, putting it in S stacks their fibers.
    # Visits each subset once with O(3^n) total element work.
    def visit(arr: np.ndarray, coord: int, mask: int) -> None:
        if coord < 0:
            vals = arr[:, 0]
            for q in missing:
                norm_sums[q][mask] = float(np.sum(vals**q))
            pos = vals > 0
            ent_sums[mask] = float(np.sum(vals[pos] * np.log2(vals[pos])))
            return
        half = arr.shape[1] // 2
        a, b = arr[:, :half], arr[:, half:]
        visit((a + b) * 0.5, coord - 1, mask)
        visit(np.concatenate([a, b], axis=0), coord - 1, mask | (1 << coord))

    visit(f.reshape(1, -1), n - 1, 0)

    sizes = np.exp2(np.bitwise_count(np.arange(size, dtype=np.uint64)).astype(float))
    m = float(f.mean())
    if "ent" not in entry:
        entry["ent"] = ent_sums / sizes - (m * math.log2(m) if m > 0 else 0.0)
    for q in missing:
        entry[("norm", q)] = np.log2(norm_sums[q] / sizes) / q
    _subset_cache[key] = entry
    if len(_subset_cache) > _MAX_CACHED:
        _subset_cache.popitem(last=False)
    return entry


def _require_q(q) -> int:
    if not (isinstance(q, (int, np.integer)) or float(q).is_integer()) or q < 2:
        raise ValueError(f"the norm inequality requires integer q >= 2, got {q}")
    return int(q)


def _require_distribution_function(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if np.any(f < 0):
        raise ValueError("f must be nonnegative")
    if float(f.mean()) <= 0:
        raise ValueError("f must not be identically zero")
    return f


def check_sam_norm(f: np.ndarray, eps: float, q: int, name: str = "f") -> SlackReport:
    """log2 ||T_eps f||_q <= E_{S~lam} log2 ||E(f|S)||_q, lam = 1 - h_q(eps)."""
    f = _require_distribution_function(f)
    q = _require_q(q)
    lam = 1 - h_q(eps, q)
    n = int(len(f)).bit_length() - 1
    lhs = math.log2(norm_q(noise_operator(f, eps), q))
    stats = _subset_stats(f, (q,))
    rhs = float(subset_weights(n, lam) @ stats[("norm", q)])
    return SlackReport(
        "sam_norm", {"f": name, "n": n, "eps": eps, "q": q, "lambda": lam}, lhs, rhs
    )


def check_sam_entropy(f: np.ndarray, eps: float, name: str = "f") -> SlackReport:
    """Ent[T_eps f] <= E_{S~lam} Ent[E(f|S)], lam = (1-2*eps)^2."""
    f = _require_distribution_function(f)
    lam = (1 - 2 * eps) ** 2
    n = int(len(f)).bit_length() - 1
    lhs = ent(noise_operator(f, eps))
    stats = _subset_stats(f, ())
    rhs = float(subset_weights(n, lam) @ stats["ent"])
    return SlackReport(
        "sam_entropy", {"f": name, "n": n, "eps": eps, "lambda": lam}, lhs, rhs
    )


def check_cor_rv(code: Code, eps: float, q: int) -> SlackReport:
    """H_q(X+Z) >= (1-lam)*n + E_{S~lam} H_q(X_S), lam = 1 - h_q(eps)."""
    q = _require_q(q)
    lam = 1 - h_q(eps, q)
    n = code.n
    noisy = noise_operator(from_code(code), eps)
    lhs_side = renyi_entropy_of_function(noisy, q)
    rhs_side = (1 - lam) * n + subset_entropy_expectation(code, lam, q)
    # slack = H_q(X+Z) - lower bound
    return SlackReport(
        "cor_rv",
        {"code": code.name, "n": n, "eps": eps, "q": q, "lambda": lam},
        lhs=rhs_side,
        rhs=lhs_side,
    )


def check_cor_rv_entropy(code: Code, eps: float) -> SlackReport:
    """H(X+Z) >= (1-lam)*n + E_{S~lam} H(X_S), lam = (1-2*eps)^2."""
    lam = (1 - 2 * eps) ** 2
    n = code.n
    noisy = noise_operator(from_code(code), eps)
    h_xz = n - ent(noisy)
    bound = (1 - lam) * n + subset_entropy_expectation(code, lam, 1.0)
    return SlackReport(
        "cor_rv_entropy",
        {"code": code.name, "n": n, "eps": eps, "lambda": lam},
        lhs=bound,
        rhs=h_xz,
    )


def check_bsc_bec(code: Code, eps: float, eta: float) -> SlackReport:
    """H(X|Y_BSC) <= (h(eps)-eta)*n + H(X|Y_BEC), for 4*eps*(1-eps) >= eta."""
    if not 0 <= eta <= 1:
        raise HypothesisViolation(f"eta={eta} outside [0, 1]")
    if 4 * eps * (1 - eps) < eta:
        raise HypothesisViolation(
            f"hypothesis 4*eps*(1-eps) >= eta fails: eps={eps}, eta={eta}"
        )
    n = code.n
    lhs = cond_entropy_bsc(code, eps)
    rhs = (binary_entropy(eps) - eta) * n + cond_entropy_bec(code, eta)
    return SlackReport(
        "bsc_bec", {"code": code.name, "n": n, "eps": eps, "eta": eta}, lhs, rhs
    )


def partial_entropy_bound_check(p) -> SlackReport:
    """sum p_i log2(1/p_i) <= (sum p_i) log2 k + 1 for sub-distributions."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or len(p) == 0:
        raise ValueError("p must be a nonempty 1-d sequence")
    if np.any(p < 0):
        raise ValueError("p must be nonnegative")
    total = float(p.sum())
    if total > 1 + 1e-12:
        raise ValueError(f"sub-distribution sums to {total} > 1")
    pos = p[p > 0]
    lhs = float(-np.sum(pos * np.log2(pos)))
    rhs = total * math.log2(len(p)) + 1
    return SlackReport("partial_entropy", {"k": len(p), "mass": total}, lhs, rhs)
