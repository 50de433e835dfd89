"""Randomised level-set search for a subset within the epsilon-relaxed band.

The search expands level sets L_0, L_1, ..., L_m.  Each entry of a level is
a pair (representative subset S, sparsifier state B).  Processing vector i
against an entry first gates S' = S + {i} directly on the eigenvalues of
A_{S'} (exact comparison, zero slack); if the gate fails, the entry's
sparsifier observes v_i with a deterministic per-path uniform draw, and the
children are inserted into the next level:

  - on a keep:   both (S, old state) and (S', new state);
  - on a skip:   only (S', old state).

Entries whose sparsifier already holds more than n sampled vectors are
dropped (size filter), and entries with identical ledgers are merged keeping
the first representative.  Any subset returned has been re-checked from
scratch, so a "found" outcome is sound unconditionally; "not found" can be
wrong only when a valid subset exists and every sampling path missed it.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import prng
from .errors import InfeasibleParameters, InternalInvariantError, ResourceExhausted
from .instance import Instance, SubsetReport, check_subset, validate
from .sparsifier import SparsifierState, new_state, observe

DEFAULT_LEVEL_CONSTANT = 40.0


@dataclass(frozen=True)
class SolverParams:
    """Derived run parameters.

    mu = epsilon/6 exactly; lam = min(c*sqrt(alpha), 1/2 - c*sqrt(alpha));
    the sparsifier delta is mu * lam, so its ridge delta/mu equals lam;
    b = 8 ln(d)/mu^2; n = ceil(C d ln(d) ln(1/lam) / mu^2).  n_override, when
    set, replaces n as the size-filter bound.
    """

    c: float
    epsilon: float
    mu: float
    lam: float
    b: float
    n: int
    level_constant: float = DEFAULT_LEVEL_CONSTANT
    n_override: Optional[int] = None
    max_level_size: Optional[int] = None

    @property
    def delta(self) -> float:
        return self.mu * self.lam

    @property
    def effective_n(self) -> int:
        return self.n if self.n_override is None else self.n_override


def derive_params(inst: Instance, c: float, epsilon: float,
                  level_constant: float = DEFAULT_LEVEL_CONSTANT) -> SolverParams:
    """Compute the run parameters for an instance and target band."""
    if not (0 < epsilon < 1):
        raise InfeasibleParameters(f"epsilon must be in (0, 1), got {epsilon}")
    if c <= 0:
        raise InfeasibleParameters(f"c must be positive, got {c}")
    ca = c * math.sqrt(inst.alpha)
    if ca >= 0.5:
        raise InfeasibleParameters(
            f"c*sqrt(alpha) = {ca:.6g} >= 1/2: the target band touches 0 or 1")
    mu = epsilon / 6.0
    lam = min(ca, 0.5 - ca)
    d = inst.dim
    b = 8.0 * math.log(d) / mu**2
    n = max(1, math.ceil(level_constant * d * math.log(d) * math.log(1.0 / lam) / mu**2))
    return SolverParams(c=c, epsilon=epsilon, mu=mu, lam=lam, b=b, n=n,
                        level_constant=level_constant)


@dataclass(frozen=True)
class LevelEntry:
    """A representative subset paired with the sparsifier state for its path."""

    subset: tuple[int, ...]
    state: SparsifierState


@dataclass
class SolveStats:
    levels_processed: int = 0
    peak_level_size: int = 0
    size_filtered: int = 0
    dedup_hits: int = 0

    def to_dict(self) -> dict:
        return {
            "levels_processed": self.levels_processed,
            "peak_level_size": self.peak_level_size,
            "size_filtered": self.size_filtered,
            "dedup_hits": self.dedup_hits,
        }


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "found" | "not-found"
    subset: Optional[tuple[int, ...]]
    report: Optional[SubsetReport]
    stats: SolveStats
    final_subsets: Optional[list[tuple[int, ...]]] = field(default=None, compare=False)

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "subset": list(self.subset) if self.subset is not None else None,
            "lambda_min": self.report.lambda_min if self.report else None,
            "lambda_max": self.report.lambda_max if self.report else None,
            "stats": self.stats.to_dict(),
        }


def _process_entry(inst, entry: LevelEntry, i: int, lo_bound: float, hi_bound: float,
                   seed: int, force_sample: bool):
    """Gate S + {i}; if it fails, observe v_i and emit the child entries.

    The gate computes the eigenvalue extremes of A_{S'} from scratch (same
    arithmetic as check_subset, minus argument validation) and compares them
    exactly against the precomputed band.
    """
    grown = entry.subset + (i,)
    rows = inst.vectors[list(grown)]
    eig = np.linalg.eigvalsh(rows.T @ rows)
    if lo_bound <= eig[0] and eig[-1] <= hi_bound:
        return grown, None
    if force_sample:
        u = 0.0
    else:
        u = prng.Stream(prng.derive_key(seed, prng.TAG_SOLVER, i, entry.state.ledger_hash)).uniform()
    state, sampled = observe(entry.state, i, inst.vectors[i], u)
    if sampled:
        children = [LevelEntry(entry.subset, entry.state), LevelEntry(grown, state)]
    else:
        children = [LevelEntry(grown, entry.state)]
    return None, children


def solve(inst: Instance, c: float, epsilon: float, seed: int,
          params_override: Optional[SolverParams] = None,
          force_sample: bool = False,
          collect_subsets: bool = False,
          threads: int = 1) -> SolveOutcome:
    """Run the level-set search; deterministic per (instance, c, epsilon, seed, params).

    force_sample pins every uniform draw to 0 so all paths keep every vector
    (the brute-force equivalence harness); collect_subsets records the final
    level's representative subsets.  With threads > 1, entries within a level
    are processed concurrently; per-path keyed randomness keeps the outcome
    identical to the sequential run.
    """
    if not inst.validated:
        inst = validate(inst)
    params = params_override if params_override is not None else derive_params(inst, c, epsilon)
    c, epsilon = params.c, params.epsilon  # override wins when both are given
    n_cap = params.effective_n
    m = inst.num_vectors
    stats = SolveStats()
    ca = c * math.sqrt(inst.alpha)
    lo_bound = (1.0 - epsilon) * (0.5 - ca)
    hi_bound = (1.0 + epsilon) * (0.5 + ca)

    level: list[LevelEntry] = [LevelEntry((), new_state(inst.dim, params.mu, params.delta))]
    stats.peak_level_size = 1
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for i in range(m):
            survivors = [e for e in level if e.state.sample_count <= n_cap]
            stats.size_filtered += len(level) - len(survivors)
            stats.levels_processed += 1

            def work(entry, _i=i):
                return _process_entry(inst, entry, _i, lo_bound, hi_bound, seed, force_sample)

            if pool is not None:
                results = list(pool.map(work, survivors))
            else:
                results = [work(e) for e in survivors]

            # Earliest gate hit in entry order wins (deterministic across thread counts).
            for hit, _ in results:
                if hit is not None:
                    report = check_subset(inst, hit, c, epsilon)
                    if not report.satisfies_eq2:
                        raise InternalInvariantError(
                            f"gated subset {hit} fails the band on independent recheck")
                    return SolveOutcome("found", report.subset, report, stats)

            next_level: list[LevelEntry] = []
            seen: dict[tuple, int] = {}
            for _, children in results:
                for child in children:
                    key = child.state.ledger
                    if key in seen:
                        stats.dedup_hits += 1
                        continue
                    seen[key] = len(next_level)
                    next_level.append(child)
            level = next_level
            stats.peak_level_size = max(stats.peak_level_size, len(level))
            if params.max_level_size is not None and len(level) > params.max_level_size:
                raise ResourceExhausted(
                    f"level {i + 1} holds {len(level)} entries > cap {params.max_level_size}",
                    stats=stats)
    finally:
        if pool is not None:
            pool.shutdown(wait=True)

    final = [e.subset for e in level] if collect_subsets else None
    return SolveOutcome("not-found", None, None, stats, final_subsets=final)


def verify_outcome(inst: Instance, outcome: SolveOutcome, c: float, epsilon: float) -> bool:
    """Independent recomputation of a found subset's band membership."""
    if not outcome.found:
        return True
    report = check_subset(inst, outcome.subset, c, epsilon)
    if not report.satisfies_eq2:
        raise InternalInvariantError(
            f"found subset {outcome.subset} fails the band on recheck")
    return True
