"""Empirical verification of the reduction: compile, solve, and compare
against the brute-force oracles over formula corpora.

A disagreement between the oracle and the solver is the artifact's most
important failure mode, so each one is captured as a reproduction bundle
(formula, level document, trace, verdicts) on disk.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from satplat.formula import (
    Clause,
    CnfFormula,
    Literal,
    QbfFormula,
    Quantifier,
    gen_random_3cnf,
    parse_dimacs,
    parse_qdimacs,
    qbf_oracle,
    sat_oracle,
    write_dimacs,
    write_qdimacs,
)
from satplat.compiler import compile_3sat, compile_qbf
from satplat.level import NP, PSPACE, Level, save_level
from satplat.sim import Move, Next, canonical_moves, initial_state, replay, step, trace_to_text
from satplat.solver import LimitExceeded, SearchStats, Solvable, solve

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"
LIMIT = "limit"


@dataclass(frozen=True)
class EquivalenceReport:
    formula_text: str
    variant: str
    oracle_verdict: bool
    level_verdict: str  # solvable | unsolvable | limit
    agree: bool
    trace: tuple[Move, ...] | None
    stats: SearchStats


@dataclass(frozen=True)
class CorpusSpec:
    """EXHAUSTIVE mode enumerates all formulas up to (n_max, k_max);
    RANDOM draws `count` seeded formulas at exactly (n, k).  The variant
    selects the NP (3-CNF) or PSPACE (QBF) pipeline."""

    mode: str  # "EXHAUSTIVE" | "RANDOM"
    variant: str = NP
    n_max: int = 2
    k_max: int = 2
    n: int = 3
    k: int = 2
    count: int = 50
    seed: int = 0


@dataclass
class CorpusSummary:
    spec: CorpusSpec
    items: int = 0
    agreements: int = 0
    limit_hits: int = 0
    disagreements: list[EquivalenceReport] = field(default_factory=list)
    reports: list[EquivalenceReport] = field(default_factory=list)
    worst_states: int = 0
    total_elapsed: float = 0.0

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.items and not self.limit_hits

    def text(self) -> str:
        lines = [
            f"corpus {self.spec.mode} {self.spec.variant}: {self.items} items, "
            f"{self.agreements} agree, {len(self.disagreements)} disagree, "
            f"{self.limit_hits} limit",
            f"worst search {self.worst_states} states, total solve time "
            f"{self.total_elapsed:.1f}s",
        ]
        for r in self.disagreements:
            lines.append(f"  DISAGREE oracle={r.oracle_verdict} level={r.level_verdict}: "
                         + r.formula_text.replace("\n", " | "))
        return "\n".join(lines) + "\n"


def _verdict(result):
    if isinstance(result, Solvable):
        return SOLVABLE, result.trace
    if isinstance(result, LimitExceeded):
        return LIMIT, None
    return UNSOLVABLE, None


def verify_formula(formula: CnfFormula, max_states: int = 5_000_000) -> EquivalenceReport:
    """Compare sat_oracle with solving the compiled NP level."""
    oracle = sat_oracle(formula) is not None
    result = solve(compile_3sat(formula), max_states=max_states)
    verdict, trace = _verdict(result)
    agree = verdict != LIMIT and (verdict == SOLVABLE) == oracle
    return EquivalenceReport(write_dimacs(formula), NP, oracle, verdict, agree,
                             trace, result.stats)


def verify_qbf(qbf: QbfFormula, max_states: int = 5_000_000) -> EquivalenceReport:
    """Compare qbf_oracle with solving the compiled PSPACE level."""
    oracle = qbf_oracle(qbf)
    result = solve(compile_qbf(qbf), max_states=max_states)
    verdict, trace = _verdict(result)
    agree = verdict != LIMIT and (verdict == SOLVABLE) == oracle
    return EquivalenceReport(write_qdimacs(qbf), PSPACE, oracle, verdict, agree,
                             trace, result.stats)


# --- corpora ----------------------------------------------------------------


def enumerate_cnf(n_max: int, k_max: int):
    """Every 3-CNF with at most n_max declared variables and k_max
    clauses, deduplicated: clause literal multisets and clause multisets
    are enumerated in canonical sorted order."""
    for n in range(n_max + 1):
        literals = [Literal(v, neg) for v in range(1, n + 1) for neg in (False, True)]
        clauses = [Clause(c) for c in
                   itertools.combinations_with_replacement(literals, 3)]
        for k in range(k_max + 1):
            for combo in itertools.combinations_with_replacement(clauses, k):
                yield CnfFormula(n, combo)


def enumerate_qbf(prefix_max: int, k_max: int):
    """Every QBF whose prefix length is at most prefix_max over the
    exhaustive matrix set with at most k_max clauses."""
    for n in range(prefix_max + 1):
        matrices = [f for f in enumerate_cnf(n, k_max) if f.num_variables == n]
        for quants in itertools.product((Quantifier.EXISTS, Quantifier.FORALL), repeat=n):
            prefix = tuple(zip(quants, range(1, n + 1)))
            for matrix in matrices:
                yield QbfFormula(prefix, matrix)


def gen_random_qbf(n: int, k: int, seed: int) -> QbfFormula:
    """Seeded random QBF: a uniform quantifier per variable plus a random
    3-CNF matrix (matrix PRNG stream is offset from the prefix stream)."""
    rng = random.Random(seed)
    prefix = tuple(
        (Quantifier.FORALL if rng.getrandbits(1) else Quantifier.EXISTS, v)
        for v in range(1, n + 1)
    )
    return QbfFormula(prefix, gen_random_3cnf(n, k, seed + 0x5A7))


def _run_np_item(text: str) -> EquivalenceReport:
    return verify_formula(parse_dimacs(text))


def _run_pspace_item(text: str) -> EquivalenceReport:
    return verify_qbf(parse_qdimacs(text))


def corpus_items(spec: CorpusSpec) -> list[str]:
    """The corpus as formula texts (picklable work items), in
    deterministic order."""
    if spec.mode == "EXHAUSTIVE":
        if spec.variant == NP:
            return [write_dimacs(f) for f in enumerate_cnf(spec.n_max, spec.k_max)]
        return [write_qdimacs(q) for q in enumerate_qbf(spec.n_max, spec.k_max)]
    if spec.variant == NP:
        return [write_dimacs(gen_random_3cnf(spec.n, spec.k, spec.seed + i))
                for i in range(spec.count)]
    return [write_qdimacs(gen_random_qbf(spec.n, spec.k, spec.seed + i))
            for i in range(spec.count)]


def run_items(items: list[str], spec: CorpusSpec, jobs: int = 1) -> CorpusSummary:
    """Verify an explicit list of formula texts under a spec's variant."""
    runner = _run_np_item if spec.variant == NP else _run_pspace_item
    summary = CorpusSummary(spec)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(runner, items, chunksize=8))
    else:
        reports = [runner(t) for t in items]
    summary.reports = reports
    for report in reports:
        summary.items += 1
        if report.level_verdict == LIMIT:
            summary.limit_hits += 1
        if report.agree:
            summary.agreements += 1
        else:
            summary.disagreements.append(report)
        summary.worst_states = max(summary.worst_states, report.stats.states_visited)
        summary.total_elapsed += report.stats.elapsed
    return summary


def run_corpus(spec: CorpusSpec, jobs: int = 1,
               repro_dir: str | Path | None = None) -> CorpusSummary:
    """Verify every corpus item; aggregation is order-independent and the
    summary is deterministic for a given spec.  Disagreements are written
    as reproduction bundles under repro_dir."""
    summary = run_items(corpus_items(spec), spec, jobs)
    if repro_dir is not None and summary.disagreements:
        write_repro_bundles(summary.disagreements, repro_dir)
    return summary


def write_repro_bundles(reports, repro_dir: str | Path) -> list[Path]:
    """One directory per disagreement: the formula, the compiled level
    document, the trace if any, and both verdicts."""
    root = Path(repro_dir)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for i, r in enumerate(reports):
        case = root / f"case_{i:04d}"
        case.mkdir(exist_ok=True)
        if r.variant == NP:
            formula = parse_dimacs(r.formula_text)
            (case / "formula.cnf").write_text(r.formula_text)
            level = compile_3sat(formula)
        else:
            qbf = parse_qdimacs(r.formula_text)
            (case / "formula.qdimacs").write_text(r.formula_text)
            level = compile_qbf(qbf)
        (case / "level.json").write_text(save_level(level))
        if r.trace is not None:
            (case / "witness.trace").write_text(trace_to_text(r.trace))
        (case / "verdicts.json").write_text(json.dumps({
            "oracle": r.oracle_verdict,
            "level": r.level_verdict,
            "agree": r.agree,
        }, indent=2) + "\n")
        written.append(case)
    return written


# --- witness integrity ------------------------------------------------------


def trace_prefix_states(level: Level, trace):
    """The state before each move of a clean replay (so states[i] is the
    state move i applies to)."""
    states = [initial_state(level)]
    for move in trace:
        out = step(level, states[-1], move)
        if not isinstance(out, Next):
            break
        states.append(out.state)
    return states


def _suffix_reaches_flag(level: Level, state, moves) -> bool:
    for move in moves:
        out = step(level, state, move)
        if not isinstance(out, Next):
            return False
        state = out.state
    return state.position == level.flag.cell


def mutate_trace(level: Level, trace, rng: random.Random, states=None,
                 max_attempts: int = 10_000, counters=None):
    """One random single-move corruption (deletion or substitution) of a
    witness trace.

    Equivalent mutants are excluded, as is standard in mutation testing:
    a draw whose result still replays to the flag is an alternative valid
    witness, not a corruption (for example, substituting a walk with a
    dash that gets clamped by the same wall, or a taller jump with the
    same landing).  Such draws are rejected and redrawn; pass a
    `counters` dict to see how many.  Pass precomputed
    `trace_prefix_states` when mutating one trace many times.
    """
    trace = list(trace)
    if states is None:
        states = trace_prefix_states(level, trace)
    for _ in range(max_attempts):
        i = rng.randrange(len(trace))
        if rng.random() < 0.5:
            mutant = tuple(trace[:i] + trace[i + 1:])
            if replay(level, mutant):
                if counters is not None:
                    counters["equivalent"] = counters.get("equivalent", 0) + 1
                continue  # an equivalent mutant (cannot happen on shortest traces)
            return mutant
        if i >= len(states):
            continue
        before = states[i]
        original = step(level, before, trace[i])
        candidates = [m for m in canonical_moves(level.physics) if m != trace[i]]
        rng.shuffle(candidates)
        for cand in candidates:
            out = step(level, before, cand)
            if isinstance(out, Next) and isinstance(original, Next) \
                    and out.state == original.state:
                continue  # outcome-identical: equivalent by construction
            if isinstance(out, Next) and _suffix_reaches_flag(
                    level, out.state, trace[i + 1:]):
                if counters is not None:
                    counters["equivalent"] = counters.get("equivalent", 0) + 1
                continue  # re-converges into an alternative witness
            return tuple(trace[:i] + [cand] + trace[i + 1:])
    raise ValueError("no non-equivalent mutation found")
