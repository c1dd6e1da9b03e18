import pytest

from satplat.compiler import (
    CompileError,
    compile_3sat,
    compile_qbf,
    plan_3sat,
    plan_qbf,
    plan_report,
    route_and_place,
    witness_trace,
)
from satplat.formula import parse_dimacs, parse_qdimacs, sat_oracle
from satplat.level import save_level, validate_level
from satplat.sim import initial_state, replay
from satplat.solver import Solvable, Unsolvable, solve


class TestCompile3Sat:
    def test_sample_formula_structure(self, sample_formula):
        level = compile_3sat(sample_formula)
        assert validate_level(level) == []
        assert len(level.platforms) == 6  # 2 per variable chamber
        assert len(level.doors) == 6  # 3 per clause wall
        assert len([p for p in level.ports if p.name.endswith(".entry")]) == 3
        # clause walls live in the final passage
        assert len([p for p in level.ports if p.name.startswith("passage.")]) == 2

    def test_initial_state_all_clause_doors_closed(self, sample_formula):
        level = compile_3sat(sample_formula)
        assert initial_state(level).door_open == 0

    def test_spawn_has_legal_moves(self, sample_formula):
        from satplat.sim import legal_moves

        level = compile_3sat(sample_formula)
        assert len(legal_moves(level, initial_state(level))) >= 1

    def test_tunnel_button_counts_match_occurrences(self, sample_formula):
        # x1 occurs once positively, once negatively; x2 twice positively
        # and never negatively; x3 once each
        level = compile_3sat(sample_formula)
        by_door = {}
        for b in level.buttons:
            by_door.setdefault(b.door_id, 0)
            by_door[b.door_id] += 1
        assert len(level.buttons) == 6  # one per literal occurrence
        assert set(by_door) == {0, 1, 2, 3, 4, 5}

    def test_empty_formula_trivially_solvable(self):
        level = compile_3sat(parse_dimacs("p cnf 0 0\n"))
        assert validate_level(level) == []
        assert isinstance(solve(level), Solvable)

    def test_contradiction_unsolvable(self):
        level = compile_3sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0"))
        assert sat_oracle(parse_dimacs("p cnf 1 2\n1 0\n-1 0")) is None
        assert isinstance(solve(level), Unsolvable)

    def test_deterministic_documents(self, sample_formula):
        a = save_level(compile_3sat(sample_formula))
        b = save_level(compile_3sat(sample_formula))
        assert a == b

    def test_bounds_enforced(self):
        import satplat.formula as fm

        big = fm.gen_random_3cnf(9, 1, 0)
        with pytest.raises(CompileError, match="bounds"):
            compile_3sat(big)

    def test_area_polynomial_proxy(self):
        # frozen constant: grid area <= 1200 * (n + k)^2 for n + k >= 1
        import satplat.formula as fm

        worst = 0.0
        for seed in range(12):
            n, k = 1 + seed % 4, seed % 5
            f = fm.gen_random_3cnf(n, k, seed)
            level = compile_3sat(f)
            ratio = (level.width * level.height) / (n + k) ** 2
            worst = max(worst, ratio)
        assert worst <= 1200

    def test_witness_trace_follows_assignment(self, sample_formula):
        level = compile_3sat(sample_formula)
        trace = witness_trace(level, {1: True, 2: False, 3: True}, 3)
        assert trace is not None
        assert replay(level, trace)

    def test_witness_trace_fails_for_falsifying_assignment(self, sample_formula):
        level = compile_3sat(sample_formula)
        # x1=1, x2=0, x3=0 falsifies the second clause
        assert witness_trace(level, {1: True, 2: False, 3: False}, 3) is None

    def test_oracle_witness_always_replays(self):
        # completeness, assignment-guided: the oracle's own model drives a
        # replayable trace on every satisfiable formula in a seeded sweep
        import satplat.formula as fm

        checked = 0
        for seed in range(15):
            f = fm.gen_random_3cnf(1 + seed % 4, seed % 5, 300 + seed)
            model = fm.sat_oracle(f)
            if model is None:
                continue
            level = compile_3sat(f)
            trace = witness_trace(level, model, f.num_variables)
            assert trace is not None and replay(level, trace)
            checked += 1
        assert checked >= 8


class TestPlanAndRouting:
    def test_one_crossover_per_variable(self, sample_formula):
        plan = plan_3sat(sample_formula)
        route_and_place(plan)
        assert len(plan.crossings) == 3
        crossovers = [p for p in plan.placements if p.blueprint.kind == "crossover"]
        assert len(crossovers) == 3

    def test_top_flag_adds_one_crossover_and_preserves_verdicts(self, sample_formula):
        plan = plan_3sat(sample_formula, top_flag=True)
        route_and_place(plan)
        assert len(plan.crossings) == 4
        level = compile_3sat(sample_formula, top_flag=True)
        assert validate_level(level) == []
        assert isinstance(solve(level), Solvable)
        unsat = parse_dimacs("p cnf 1 2\n1 0\n-1 0")
        assert isinstance(solve(compile_3sat(unsat, top_flag=True)), Unsolvable)

    def test_plan_report_mentions_crossings(self, sample_formula):
        plan = plan_3sat(sample_formula)
        route_and_place(plan)
        report = plan_report(plan)
        assert "crossings 3" in report
        assert "variable" in report and "crossover" in report

    def test_deterministic_plans(self, sample_formula):
        a = plan_3sat(sample_formula)
        b = plan_3sat(sample_formula)
        assert a.placements == b.placements and a.carves == b.carves

    def test_three_wires_at_a_point_rejected(self):
        from satplat.compiler import Wire, detect_crossings

        wires = [
            Wire("h", ((0, 5), (10, 5))),
            Wire("v1", ((5, 0), (5, 10))),
            Wire("d", ((5, 0), (5, 10))),  # a second vertical through (5, 5)
        ]
        with pytest.raises(CompileError, match="more than two wires"):
            detect_crossings(wires)

    def test_uncovered_crossing_rejected(self, sample_formula):
        plan = plan_3sat(sample_formula)
        plan.placements = [p for p in plan.placements
                           if p.blueprint.kind != "crossover"]
        with pytest.raises(CompileError, match="not covered"):
            route_and_place(plan)


class TestCompileQbf:
    def test_small_true_qbf_solvable(self):
        q = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 -2 0")
        level = compile_qbf(q)
        assert validate_level(level) == []
        assert level.variant == "PSPACE"
        assert isinstance(solve(level), Solvable)

    def test_false_qbf_unsolvable(self):
        q = parse_qdimacs("p cnf 1 1\na 1 0\n1 0")
        assert isinstance(solve(compile_qbf(q)), Unsolvable)

    def test_all_exists_matches_np_pipeline(self, sample_formula):
        q = parse_qdimacs("p cnf 3 2\ne 1 2 3 0\n1 2 -3 0\n-1 2 3 0")
        np_verdict = isinstance(solve(compile_3sat(sample_formula)), Solvable)
        qbf_verdict = isinstance(solve(compile_qbf(q)), Solvable)
        assert np_verdict == qbf_verdict is True

    def test_deterministic(self):
        q = parse_qdimacs("p cnf 1 1\ne 1 0\n1 0")
        assert save_level(compile_qbf(q)) == save_level(compile_qbf(q))

    def test_bounds_enforced(self):
        q = parse_qdimacs("p cnf 5 0\ne 1 2 3 4 5 0\n")
        with pytest.raises(CompileError, match="bounds"):
            compile_qbf(q)

    def test_quantifier_gadget_counts(self):
        q = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 -2 0")
        plan = plan_qbf(q)
        kinds = [p.blueprint.kind for p in plan.placements]
        assert kinds.count("exists") == 1
        assert kinds.count("forall") == 1
        assert kinds.count("clause") == 1
        assert kinds.count("elevator") == 1
