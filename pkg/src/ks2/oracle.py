"""Ground-truth discrepancy by exhaustive subset enumeration.

W(inst) is the minimum over all 2^m subsets S of the worst-direction
deviation of A_S = sum_{i in S} v_i v_i^T from I/2.  The walk visits
subsets in binary-reflected Gray-code order so each step is a rank-1
update; matrices are buffered in chunks and sent to a single batched
eigenvalue call, and every chunk restarts its accumulator from a
from-scratch sum so rounding drift cannot build up across the walk.

A branch-and-bound variant prunes a partial choice over indices < i when
even the best completion cannot beat the incumbent: any completion A_S
satisfies P <= A_S <= P + R_i (P = partial sum, R_i = mass of undecided
vectors), so its deviation is at least
max(lambda_max(P) - 1/2, 1/2 - lambda_min(P + R_i), 0).  Results agree
exactly with the exhaustive walk; only the argmin may differ among ties.
"""
from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import TooLarge
from .instance import Instance
from .linalg import spectral_distance_half

DEFAULT_M_LIMIT = 24
_CHUNK = 1 << 14


@dataclass(frozen=True)
class OracleResult:
    w_value: float
    argmin_subset: tuple[int, ...]
    subsets_examined: int
    feasible_eq1: Optional[bool] = None
    c: Optional[float] = None

    def to_dict(self) -> dict:
        d = {
            "w": self.w_value,
            "subset": list(self.argmin_subset),
            "examined": self.subsets_examined,
        }
        if self.feasible_eq1 is not None:
            d["feasible_eq1"] = self.feasible_eq1
            d["c"] = self.c
        return d


def gray_code(k: int) -> int:
    return k ^ (k >> 1)


def gray_subset(k: int) -> tuple[int, ...]:
    """Subset of indices encoded by the k-th Gray code."""
    g = gray_code(k)
    out = []
    j = 0
    while g:
        if g & 1:
            out.append(j)
        g >>= 1
        j += 1
    return tuple(out)


def _subset_matrix(vectors: np.ndarray, k: int) -> np.ndarray:
    idx = list(gray_subset(k))
    d = vectors.shape[1]
    if not idx:
        return np.zeros((d, d))
    rows = vectors[idx]
    return rows.T @ rows


def _chunk_min(vectors: np.ndarray, outers: np.ndarray, k0: int, k1: int) -> tuple[float, int]:
    """Minimum (deviation, gray index) over subsets k0 <= k < k1."""
    count = k1 - k0
    a0 = _subset_matrix(vectors, k0)
    mats = np.empty((count,) + a0.shape)
    mats[0] = a0
    if count > 1:
        ks = np.arange(k0 + 1, k1, dtype=np.int64)
        low = ks & -ks
        flips = np.log2(low.astype(np.float64)).astype(np.int64)
        g = ks ^ (ks >> 1)
        on = ((g >> flips) & 1).astype(np.float64)
        signs = 2.0 * on - 1.0
        deltas = signs[:, None, None] * outers[flips]
        mats[1:] = a0 + np.cumsum(deltas, axis=0)
    eig = np.linalg.eigvalsh(mats)
    dev = np.maximum(eig[:, -1] - 0.5, 0.5 - eig[:, 0])
    t = int(np.argmin(dev))
    return float(dev[t]), k0 + t


def brute_force_w(inst: Instance, m_limit: int = DEFAULT_M_LIMIT,
                  threads: int = 1, method: str = "batched") -> OracleResult:
    """Exact W by full enumeration of all 2^m subsets.

    method="reference" evaluates one subset at a time through the scalar
    eigenvalue kernel; it is the audit path for the batched walk and only
    sensible for small m.
    """
    m = inst.num_vectors
    if m > m_limit:
        raise TooLarge(f"m = {m} exceeds m_limit = {m_limit}")
    if m > DEFAULT_M_LIMIT:
        warnings.warn(f"enumerating 2^{m} subsets; this may take a while", RuntimeWarning)
    total = 1 << m

    if method == "reference":
        best_w, best_k = np.inf, 0
        for k in range(total):
            w = spectral_distance_half(inst.gram(gray_subset(k)))
            if w < best_w:
                best_w, best_k = w, k
        return OracleResult(best_w, gray_subset(best_k), total)
    if method != "batched":
        raise ValueError(f"unknown method {method!r}")

    vectors = inst.vectors
    outers = np.einsum("ij,ik->ijk", vectors, vectors)
    ranges = [(k0, min(k0 + _CHUNK, total)) for k0 in range(0, total, _CHUNK)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _chunk_min(vectors, outers, *r), ranges))
    else:
        parts = [_chunk_min(vectors, outers, *r) for r in ranges]
    best_w, best_k = min(parts, key=lambda t: (t[0], t[1]))
    return OracleResult(best_w, gray_subset(best_k), total)


def eq1_feasible(inst: Instance, c: float, m_limit: int = DEFAULT_M_LIMIT,
                 threads: int = 1, method: str = "batched"):
    """(W <= c*sqrt(alpha), witness subset or None) by full enumeration."""
    res = brute_force_w(inst, m_limit=m_limit, threads=threads, method=method)
    threshold = c * float(np.sqrt(inst.alpha))
    feasible = res.w_value <= threshold
    witness = res.argmin_subset if feasible else None
    return feasible, witness


def eq1_feasible_result(inst: Instance, c: float, m_limit: int = DEFAULT_M_LIMIT,
                        threads: int = 1) -> OracleResult:
    """Like eq1_feasible but returning the full OracleResult with the flag set."""
    res = brute_force_w(inst, m_limit=m_limit, threads=threads)
    threshold = c * float(np.sqrt(inst.alpha))
    return OracleResult(res.w_value, res.argmin_subset, res.subsets_examined,
                        feasible_eq1=res.w_value <= threshold, c=c)


def branch_bound_w(inst: Instance, node_limit: Optional[int] = None) -> OracleResult:
    """W by depth-first search with completion-bound pruning.

    Identical w_value to brute_force_w; subsets_examined counts evaluated
    leaves.  node_limit (expanded nodes) raises TooLarge when exceeded.
    """
    vectors = inst.vectors
    m, d = vectors.shape
    outers = [np.outer(v, v) for v in vectors]
    suffix = [np.zeros((d, d)) for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + outers[i]

    best_w = np.inf
    best_subset: tuple[int, ...] = ()
    leaves = 0
    nodes = 0

    def deviation(a: np.ndarray) -> float:
        w = np.linalg.eigvalsh(a)
        return float(max(w[-1] - 0.5, 0.5 - w[0]))

    stack = [(0, np.zeros((d, d)), ())]
    while stack:
        i, partial, chosen = stack.pop()
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise TooLarge(f"branch-and-bound exceeded node limit {node_limit}")
        if i == m:
            leaves += 1
            w = deviation(partial)
            if w < best_w:
                best_w, best_subset = w, chosen
            continue
        hi = np.linalg.eigvalsh(partial)[-1]
        lo = np.linalg.eigvalsh(partial + suffix[i])[0]
        bound = max(hi - 0.5, 0.5 - lo, 0.0)
        if bound >= best_w:
            continue
        # Exclude branch explored first (pushed last).
        stack.append((i + 1, partial + outers[i], chosen + (i,)))
        stack.append((i + 1, partial, chosen))
    return OracleResult(best_w, best_subset, leaves)
