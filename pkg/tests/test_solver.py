import pytest

from satplat.compiler import compile_3sat
from satplat.level import LevelError
from satplat.sim import Next, canonical_moves, initial_state, replay, step, walk
from satplat.solver import (
    LimitExceeded,
    Solvable,
    Unsolvable,
    reachable_ports,
    solve,
    solve_between,
)
from tests.conftest import level_from_art


class TestSolve:
    def test_minimal_level_one_move(self, minimal_level):
        result = solve(minimal_level)
        assert isinstance(result, Solvable)
        assert result.trace == (walk(1),)

    def test_trace_replays(self, sample_formula):
        level = compile_3sat(sample_formula)
        result = solve(level)
        assert isinstance(result, Solvable)
        assert replay(level, result.trace)

    def test_unsolvable_dead_end(self):
        level = level_from_art("#####\n#S#F#\n#####")
        result = solve(level)
        assert isinstance(result, Unsolvable)
        assert result.stats.states_visited >= 1

    def test_spawn_on_flag(self):
        level = level_from_art("####\n#S.#\n####", validate=False)
        from satplat.level import Flag, Level

        level = Level(level.width, level.height, level.tiles,
                      level.entities + (Flag((1, 1)),))
        result = solve(level)
        assert isinstance(result, Solvable)
        assert result.trace == ()

    def test_determinism_including_trace(self, sample_formula):
        level = compile_3sat(sample_formula)
        a = solve(level)
        b = solve(level)
        assert a.trace == b.trace

    def test_state_limit(self, sample_formula):
        level = compile_3sat(sample_formula)
        result = solve(level, max_states=10)
        assert isinstance(result, LimitExceeded)

    def test_time_limit(self, sample_formula):
        level = compile_3sat(sample_formula)
        result = solve(level, max_time=0.0)
        assert isinstance(result, (LimitExceeded, Solvable))

    def test_stats_sane(self, minimal_level):
        result = solve(minimal_level)
        s = result.stats
        assert s.states_visited >= s.states_expanded >= 0
        assert s.frontier_peak >= 1


class TestReachablePorts:
    def test_unknown_port(self, minimal_level):
        with pytest.raises(LevelError, match="unknown port"):
            reachable_ports(minimal_level, "nowhere")

    def test_compiled_level_ports_exposed(self, sample_formula):
        level = compile_3sat(sample_formula)
        names = {p.name for p in level.ports}
        assert "x1.entry" in names and "x3.exit_false" in names
        assert "passage.flag_port" in names
        reached = reachable_ports(level, "x1.entry")
        assert {"x1.exit_true", "x1.exit_false"} <= reached


class TestSolveBetween:
    def test_same_cell(self, minimal_level):
        state = initial_state(minimal_level)
        trace, end = solve_between(minimal_level, state, state.position)
        assert trace == () and end == state

    def test_unreachable_goal(self):
        level = level_from_art("#####\n#S#F#\n#####")
        assert solve_between(level, initial_state(level), (3, 1)) is None


class TestPruningSoundness:
    def test_visited_set_matches_unpruned_enumeration(self):
        # On a small level, the BFS visited set must contain every state an
        # unpruned bounded DFS can reach: the (position, dash, doors,
        # platforms) key loses no information.
        level = level_from_art(
            "#######\n#..=..#\n#S...F#\n#######",
            entities=[__import__("satplat.level", fromlist=["UnstablePlatform"])
                      .UnstablePlatform(0, (3, 2))],
            validate=False,
        )
        from satplat.sim import sim_context
        from satplat.solver import _search

        ctx = sim_context(level)
        s0 = initial_state(level)
        start = (s0.position[0], s0.position[1], 1, s0.door_open, s0.platform_broken)
        _, _, visited, _, _ = _search(ctx, start, None, 10**6, None)

        moves = canonical_moves(level.physics)
        seen = set()

        def dfs(state, depth):
            key = (state.position[0], state.position[1], int(state.has_dash),
                   state.door_open, state.platform_broken)
            seen.add(key)
            if depth == 0:
                return
            for move in moves:
                out = step(level, state, move)
                if isinstance(out, Next):
                    dfs(out.state, depth - 1)

        dfs(s0, 5)
        assert seen <= visited
