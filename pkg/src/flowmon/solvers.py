"""Monitor-placement solvers.

sigma_greedy places monitors in batches of sigma, each batch chosen by
exhaustive search to maximize the immediate gain (batch weight plus the
bridges it exposes); collected edges leave the working graph before the
next batch. exact enumerates all size-k monitor sets and is the oracle
the approximation guarantees are tested against. solve_pipeline wires
preprocessing, a solver, and the lift back to original edge ids into the
end-to-end path the CLI uses.

Determinism: among equal-gain candidate sets the lexicographically
smallest sorted id tuple wins, so traces are reproducible and tests can
compare outputs byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

from .errors import CandidateBudgetError, SizeGuardError, ValidationError
from .graph import Graph, bridge_ids, make_mask, spanning_forest
from .reduce import ReductionMap, lift_monitors, preprocess
from .weights import Weight

EXACT_DEFAULT_BUDGET = 2_000_000
GREEDY_DEFAULT_BUDGET = 50_000_000

TIE_BREAK_LOWEST_IDS = "lowest-id-tuple"


@dataclass(frozen=True)
class SolverConfig:
    k: int
    sigma: int = 1
    tie_break: str = TIE_BREAK_LOWEST_IDS
    max_candidate_evals: int = GREEDY_DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValidationError("monitor budget k must be at least 1")
        if self.sigma < 1:
            raise ValidationError("batch size sigma must be at least 1")
        if self.tie_break != TIE_BREAK_LOWEST_IDS:
            raise ValidationError(f"unknown tie-break policy {self.tie_break!r}")


@dataclass(frozen=True)
class StepRecord:
    """One greedy step: the monitors placed, everything collected (monitors
    plus exposed bridges), and the step's gain. remaining_before and
    candidates feed the bench harness."""

    monitors_placed: frozenset[int]
    collected: frozenset[int]
    step_gain: Weight
    remaining_before: int
    candidates: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[StepRecord, ...]


@dataclass(frozen=True)
class Solution:
    """monitors plus determined_extras are the edges with known flow;
    gain is their total weight. zero_flow lists stripped bridges of the
    original graph (known zero, reported separately, never counted)."""

    monitors: frozenset[int]
    determined_extras: frozenset[int]
    gain: Weight
    trace: GreedyTrace | None = None
    zero_flow: frozenset[int] = field(default_factory=frozenset)


def _take_everything(g: Graph) -> Solution:
    m = len(g.edges)
    all_edges = frozenset(range(m))
    total = g.total_weight()
    steps = ()
    if m:
        steps = (StepRecord(all_edges, all_edges, total, m, 0),)
    return Solution(all_edges, frozenset(), total, GreedyTrace(steps))


def sigma_greedy(g: Graph, cfg: SolverConfig) -> Solution:
    """Run ceil(k/sigma) batched greedy steps.

    Each step enumerates all sigma'-subsets of the remaining edges
    (sigma' = k mod sigma on the final partial step) and takes the subset
    maximizing subset weight plus exposed bridge weight; the collected
    edges are removed before the next step. If at most sigma' edges
    remain they are all taken and the run halts; if the graph empties the
    trace is simply truncated. A budget ceiling on subset evaluations
    guards large sigma.
    """
    m = len(g.edges)
    k, sigma = cfg.k, cfg.sigma
    if k >= m:
        return _take_everything(g)

    w = g.weights_micros
    gone = bytearray(m)
    monitors: list[int] = []
    steps: list[StepRecord] = []
    evals_used = 0
    n_steps = -(-k // sigma)
    partial_step = k // sigma + 1  # reachable only when k % sigma > 0

    for t in range(1, n_steps + 1):
        live = [e for e in range(m) if not gone[e]]
        if not live:
            break
        sp = k % sigma if t == partial_step else sigma
        if len(live) <= sp:
            for e in live:
                gone[e] = 1
            monitors.extend(live)
            taken = frozenset(live)
            steps.append(
                StepRecord(taken, taken, Weight(sum(w[e] for e in live)), len(live), 0)
            )
            break
        count = comb(len(live), sp)
        if evals_used + count > cfg.max_candidate_evals:
            raise CandidateBudgetError(
                f"step {t} needs {count} candidate evaluations;"
                f" budget {cfg.max_candidate_evals} exhausted"
            )
        evals_used += count
        best = -1
        best_p: tuple[int, ...] = ()
        best_b: list[int] = []
        for p in combinations(live, sp):
            for e in p:
                gone[e] = 1
            b = bridge_ids(g, gone)
            val = sum(w[e] for e in p) + sum(w[e] for e in b)
            if val > best:
                best, best_p, best_b = val, p, b
            for e in p:
                gone[e] = 0
        collected = set(best_p)
        collected.update(best_b)
        for e in collected:
            gone[e] = 1
        monitors.extend(best_p)
        steps.append(
            StepRecord(frozenset(best_p), frozenset(collected), Weight(best), len(live), count)
        )

    mon = frozenset(monitors)
    extras = frozenset(bridge_ids(g, make_mask(g, mon)))
    total = Weight(sum(w[e] for e in mon) + sum(w[e] for e in extras))
    return Solution(mon, extras, total, GreedyTrace(tuple(steps)))


def one_greedy(g: Graph, k: int) -> Solution:
    return sigma_greedy(g, SolverConfig(k=k, sigma=1))


def two_greedy(g: Graph, k: int) -> Solution:
    return sigma_greedy(g, SolverConfig(k=k, sigma=2))


def exact(g: Graph, k: int, max_evals: int = EXACT_DEFAULT_BUDGET) -> Solution:
    """Maximum-gain monitor set by exhaustive enumeration.

    Only subsets of size exactly min(k, m) are tried: gain never
    decreases when a monitor is added, so the optimum over sets of size
    at most k is attained at full size. Refuses instances whose subset
    count exceeds the evaluation budget.
    """
    if k < 1:
        raise ValidationError("monitor budget k must be at least 1")
    m = len(g.edges)
    size = min(k, m)
    total = comb(m, size)
    if total > max_evals:
        raise SizeGuardError(
            f"exhaustive search needs C({m},{size}) = {total} evaluations;"
            f" the guard allows {max_evals}"
        )
    w = g.weights_micros
    mask = bytearray(m)
    best = -1
    best_p: tuple[int, ...] = ()
    best_b: tuple[int, ...] = ()
    for p in combinations(range(m), size):
        for e in p:
            mask[e] = 1
        b = bridge_ids(g, mask)
        val = sum(w[e] for e in p) + sum(w[e] for e in b)
        if val > best:
            best, best_p, best_b = val, p, tuple(b)
        for e in p:
            mask[e] = 0
    return Solution(frozenset(best_p), frozenset(best_b), Weight(best))


def full_determination(g: Graph) -> frozenset[int]:
    """Monitors that determine every edge: the complement of a spanning
    forest. Size is m - n + (number of components)."""
    return frozenset(range(len(g.edges))) - spanning_forest(g)


def _translate_trace(trace: GreedyTrace | None, rmap: ReductionMap) -> GreedyTrace | None:
    if trace is None:
        return None
    table = rmap.orig_edge_of_reduced
    steps = tuple(
        StepRecord(
            frozenset(table[e] for e in s.monitors_placed),
            frozenset(table[e] for e in s.collected),
            s.step_gain,
            s.remaining_before,
            s.candidates,
        )
        for s in trace.steps
    )
    return GreedyTrace(steps)


def solve_pipeline(g: Graph, k: int, algo: Callable[[Graph, int], Solution]) -> Solution:
    """Preprocess, solve on the reduced graph, lift back.

    With k >= m the answer is trivially all edges. Otherwise monitors are
    chosen on the reduced graph and lifted to original ids; gain and
    extras are recomputed on the bridge-stripped merged graph, which by
    construction equals the reduced-graph gain. Stripped bridges come
    back in zero_flow: their flow is known (zero) without spending
    monitors, and they never count toward gain.
    """
    m = len(g.edges)
    if k >= m:
        return Solution(frozenset(range(m)), frozenset(), g.total_weight())
    reduced, rmap = preprocess(g)
    sub = algo(reduced, k)
    lifted = lift_monitors(sub.monitors, rmap)
    extras_all = frozenset(bridge_ids(g, make_mask(g, lifted)))
    extras = extras_all - rmap.stripped_bridges
    w = g.weights_micros
    total = Weight(sum(w[e] for e in lifted) + sum(w[e] for e in extras))
    return Solution(
        lifted,
        extras,
        total,
        _translate_trace(sub.trace, rmap),
        zero_flow=rmap.stripped_bridges,
    )
