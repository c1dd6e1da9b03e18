import pytest

from satplat.compiler import compile_3sat
from satplat.level import (
    Button,
    Door,
    Flag,
    Level,
    LevelError,
    PhysicsParams,
    SpaceBlock,
    Spawn,
    UnstablePlatform,
    load_level,
    render_ascii,
    save_level,
    validate_level,
)
from satplat.sim import GameState, Next, initial_state, step, walk
from tests.conftest import level_from_art


class TestRoundTrip:
    def test_minimal(self, minimal_level):
        assert load_level(save_level(minimal_level)) == minimal_level

    def test_document_is_byte_stable(self, minimal_level):
        doc = save_level(minimal_level)
        assert save_level(load_level(doc)) == doc

    def test_compiled_level(self, sample_formula):
        level = compile_3sat(sample_formula)
        assert load_level(save_level(level)) == level

    def test_compiled_pspace_level(self):
        from satplat.compiler import compile_qbf
        from satplat.formula import parse_qdimacs

        level = compile_qbf(parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 -2 0"))
        assert load_level(save_level(level)) == level

    def test_entity_ordering_preserved(self):
        level = level_from_art(
            "#####\n#S.F#\n#####",
            entities=[
                UnstablePlatform(3, (2, 1)),
            ],
        )
        again = load_level(save_level(level))
        assert again.entities == level.entities


class TestValidation:
    def test_minimal_is_valid(self, minimal_level):
        assert validate_level(minimal_level) == []

    def test_two_spawns(self):
        level = level_from_art("#####\n#S.F#\n#####", validate=False)
        level = Level(level.width, level.height, level.tiles,
                      level.entities + (Spawn((2, 1)),))
        rules = {v.rule for v in validate_level(level)}
        assert "spawn-count" in rules

    def test_close_button_in_np_variant(self):
        level = level_from_art(
            "######\n#S..F#\n######",
            entities=[Door(0, ((3, 1),)), Button((2, 1), 0, "close")],
            validate=False,
        )
        rules = {v.rule for v in validate_level(level)}
        assert "close-button-variant" in rules

    def test_flag_on_solid(self):
        level = level_from_art("####\n#S.#\n####", validate=False)
        level = Level(level.width, level.height, level.tiles,
                      level.entities + (Flag((2, 0)),))
        rules = {v.rule for v in validate_level(level)}
        assert "entity-on-empty" in rules

    def test_dangling_door_id(self):
        level = level_from_art(
            "#####\n#S.F#\n#####",
            entities=[Button((2, 1), 99)],
            validate=False,
        )
        rules = {v.rule for v in validate_level(level)}
        assert "dangling-door-id" in rules

    def test_entity_overlap(self):
        level = level_from_art(
            "#####\n#S.F#\n#####",
            entities=[UnstablePlatform(0, (2, 1)), UnstablePlatform(1, (2, 1))],
            validate=False,
        )
        rules = {v.rule for v in validate_level(level)}
        assert "entity-overlap" in rules

    def test_unsupported_spawn(self):
        level = level_from_art("####\n#S.#\n#..#\n####", validate=False)
        level = Level(level.width, level.height, level.tiles,
                      level.entities + (Flag((2, 1)),))
        rules = {v.rule for v in validate_level(level)}
        assert "spawn-support" in rules

    def test_door_strip_shape(self):
        level = level_from_art(
            "#####\n#..F#\n#S..#\n#####",
            entities=[Door(0, ((2, 1), (3, 2)))],  # not vertically aligned
            validate=False,
        )
        rules = {v.rule for v in validate_level(level)}
        assert "door-strip" in rules

    def test_load_rejects_invalid(self, minimal_level):
        doc = save_level(minimal_level).replace('"spawn"', '"flag"')
        with pytest.raises(LevelError, match="flag"):
            load_level(doc)

    def test_bad_physics_rejected(self):
        with pytest.raises(LevelError):
            PhysicsParams(0, 4, 2)

    def test_compiled_levels_validate_clean(self, sample_formula):
        assert validate_level(compile_3sat(sample_formula)) == []


class TestRender:
    def test_minimal_shape_and_glyphs(self, minimal_level):
        text = render_ascii(minimal_level)
        lines = text.splitlines()
        assert len(lines) == minimal_level.height
        assert all(len(l) == minimal_level.width for l in lines)
        assert "S" in text and "F" in text

    def test_door_open_and_closed_glyphs(self):
        level = level_from_art(
            "######\n#S..F#\n######",
            entities=[Door(0, ((2, 1),)), Door(1, ((3, 1),), initially_open=True)],
            validate=False,
        )
        text = render_ascii(level)
        assert "D" in text and "d" in text
        # with a live state, glyphs follow the door bits
        state = GameState((1, 1), True, 0b01, 0)
        text = render_ascii(level, state)
        row = text.splitlines()[1]
        assert row[2] == "d" and row[3] == "D"

    def test_broken_platform_renders_empty(self):
        level = level_from_art(
            "######\n#S..F#\n##=..#\n#....#\n######",
            entities=[UnstablePlatform(0, (2, 2))],
            validate=False,
        )
        assert "=" in render_ascii(level)
        # walk onto the platform: it breaks under the player
        state = initial_state(level)
        out = step(level, state, walk(1))
        assert isinstance(out, Next)
        assert out.state.platform_broken == 1
        art = render_ascii(level, out.state)
        assert "=" not in art
        assert "@" in art

    def test_player_glyph(self, minimal_level):
        text = render_ascii(minimal_level, initial_state(minimal_level))
        assert text.splitlines()[1][1] == "@"

    def test_space_block_glyph(self):
        level = level_from_art(
            "#####\n#S.F#\n#####",
            entities=[SpaceBlock(0, (2, 1, 2, 1))],
            validate=False,
        )
        assert "*" in render_ascii(level)
