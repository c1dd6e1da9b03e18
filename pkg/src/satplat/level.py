"""Level data model: a rectangular tile grid plus entity records.

Coordinates are (x, y) with x growing rightward and y growing upward;
row 0 is the bottom of the grid.  Tiles are stored bottom row first; the
text document and the ASCII renderer both show the top row first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

Cell = tuple[int, int]

SOLID = "#"
EMPTY = "."

NP = "NP"
PSPACE = "PSPACE"

OPEN = "open"
CLOSE = "close"


class LevelError(ValueError):
    """Raised for malformed level documents or invalid level structure."""


@dataclass(frozen=True)
class PhysicsParams:
    """Calibration constants for the simplified movement model.

    jump_rise: maximum cells a jump ascends; dash_length: cells a dash
    travels; reform_distance: Chebyshev distance at which a broken
    platform reforms.
    """

    jump_rise: int = 3
    dash_length: int = 4
    reform_distance: int = 2

    def __post_init__(self):
        if self.jump_rise < 1 or self.dash_length < 2 or self.reform_distance < 1:
            raise LevelError(
                f"bad physics: J={self.jump_rise} D={self.dash_length} R={self.reform_distance}"
            )


@dataclass(frozen=True)
class UnstablePlatform:
    """Breaks when stood on, reforms once the player is far enough away;
    impassable from every direction while intact."""

    id: int
    cell: Cell


@dataclass(frozen=True)
class Door:
    """A vertical strip of 1-3 cells; passable only while open."""

    id: int
    cells: tuple[Cell, ...]
    initially_open: bool = False


@dataclass(frozen=True)
class Button:
    """Fired by a dash passing through its cell; blocks walking."""

    cell: Cell
    door_id: int
    action: str = OPEN


@dataclass(frozen=True)
class SpaceBlock:
    """A rectangular region that carries a dashing player straight through."""

    id: int
    rect: tuple[int, int, int, int]  # x0, y0, x1, y1 inclusive

    @property
    def cells(self) -> list[Cell]:
        x0, y0, x1, y1 = self.rect
        return [(x, y) for y in range(y0, y1 + 1) for x in range(x0, x1 + 1)]

    def contains(self, cell: Cell) -> bool:
        x0, y0, x1, y1 = self.rect
        return x0 <= cell[0] <= x1 and y0 <= cell[1] <= y1


@dataclass(frozen=True)
class Spawn:
    cell: Cell


@dataclass(frozen=True)
class Flag:
    cell: Cell


Entity = UnstablePlatform | Door | Button | SpaceBlock | Spawn | Flag


@dataclass(frozen=True)
class Port:
    """A named boundary cell of a stamped gadget, kept as level metadata."""

    name: str
    cell: Cell
    direction: str  # compass heading a traveler crosses the port with


@dataclass(frozen=True)
class Level:
    width: int
    height: int
    tiles: tuple[str, ...]  # bottom row first, strings of '#'/'.'
    entities: tuple[Entity, ...]
    variant: str = NP
    physics: PhysicsParams = field(default_factory=PhysicsParams)
    ports: tuple[Port, ...] = ()

    def tile(self, x: int, y: int) -> str:
        return self.tiles[y][x]

    def is_solid(self, x: int, y: int) -> bool:
        if not (0 <= x < self.width and 0 <= y < self.height):
            return True  # outside the grid counts as solid
        return self.tiles[y][x] == SOLID

    def entity_cells(self, entity: Entity) -> list[Cell]:
        if isinstance(entity, Door):
            return list(entity.cells)
        if isinstance(entity, SpaceBlock):
            return entity.cells
        return [entity.cell]

    @property
    def spawn(self) -> Spawn:
        return next(e for e in self.entities if isinstance(e, Spawn))

    @property
    def flag(self) -> Flag:
        return next(e for e in self.entities if isinstance(e, Flag))

    @property
    def doors(self) -> list[Door]:
        return [e for e in self.entities if isinstance(e, Door)]

    @property
    def platforms(self) -> list[UnstablePlatform]:
        return [e for e in self.entities if isinstance(e, UnstablePlatform)]

    @property
    def buttons(self) -> list[Button]:
        return [e for e in self.entities if isinstance(e, Button)]

    @property
    def space_blocks(self) -> list[SpaceBlock]:
        return [e for e in self.entities if isinstance(e, SpaceBlock)]

    def port(self, name: str) -> Port:
        for p in self.ports:
            if p.name == name:
                return p
        raise LevelError(f"unknown port {name!r}")


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.subject}: {self.message}"


def validate_level(level: Level) -> list[Violation]:
    """All level invariants; an empty list means the level is valid."""
    out: list[Violation] = []

    def bad(rule: str, subject: str, message: str):
        out.append(Violation(rule, subject, message))

    if len(level.tiles) != level.height or any(len(r) != level.width for r in level.tiles):
        bad("grid-shape", "tiles", "tile grid does not match width/height")
        return out  # nothing else is checkable

    for x in range(level.width):
        if level.tile(x, 0) != SOLID or level.tile(x, level.height - 1) != SOLID:
            bad("sealed-boundary", f"column {x}", "top/bottom boundary must be solid")
    for y in range(level.height):
        if level.tile(0, y) != SOLID or level.tile(level.width - 1, y) != SOLID:
            bad("sealed-boundary", f"row {y}", "left/right boundary must be solid")

    if level.variant not in (NP, PSPACE):
        bad("variant", level.variant, "variant must be NP or PSPACE")

    seen_cells: dict[Cell, str] = {}
    door_ids: set[int] = set()
    plat_ids: set[int] = set()
    block_ids: set[int] = set()
    spawns = flags = 0

    for i, ent in enumerate(level.entities):
        name = f"{type(ent).__name__}#{i}"
        cells = level.entity_cells(ent)
        for cell in cells:
            x, y = cell
            if not (0 <= x < level.width and 0 <= y < level.height):
                bad("in-bounds", name, f"cell {cell} outside the grid")
                continue
            if level.tile(x, y) != EMPTY:
                bad("entity-on-empty", name, f"cell {cell} is not an EMPTY tile")
            if cell in seen_cells:
                bad("entity-overlap", name, f"cell {cell} already used by {seen_cells[cell]}")
            seen_cells[cell] = name

        if isinstance(ent, Spawn):
            spawns += 1
        elif isinstance(ent, Flag):
            flags += 1
        elif isinstance(ent, Door):
            if ent.id in door_ids:
                bad("unique-door-id", name, f"duplicate door id {ent.id}")
            door_ids.add(ent.id)
            if not 1 <= len(ent.cells) <= 3:
                bad("door-strip", name, f"door must span 1-3 cells, has {len(ent.cells)}")
            xs = {c[0] for c in ent.cells}
            ys = sorted(c[1] for c in ent.cells)
            if len(xs) != 1 or ys != list(range(ys[0], ys[0] + len(ys))):
                bad("door-strip", name, "door cells must form a vertical contiguous strip")
        elif isinstance(ent, UnstablePlatform):
            if ent.id in plat_ids:
                bad("unique-platform-id", name, f"duplicate platform id {ent.id}")
            plat_ids.add(ent.id)
        elif isinstance(ent, SpaceBlock):
            if ent.id in block_ids:
                bad("unique-block-id", name, f"duplicate space block id {ent.id}")
            block_ids.add(ent.id)
            x0, y0, x1, y1 = ent.rect
            if x0 > x1 or y0 > y1:
                bad("block-rect", name, f"degenerate rect {ent.rect}")

    for i, ent in enumerate(level.entities):
        if isinstance(ent, Button):
            name = f"Button#{i}"
            if ent.door_id not in door_ids:
                bad("dangling-door-id", name, f"button targets missing door {ent.door_id}")
            if ent.action not in (OPEN, CLOSE):
                bad("button-action", name, f"unknown action {ent.action!r}")
            if ent.action == CLOSE and level.variant != PSPACE:
                bad("close-button-variant", name, "CLOSE button in NP variant")

    if spawns != 1:
        bad("spawn-count", "level", f"exactly one Spawn required, found {spawns}")
    if flags != 1:
        bad("flag-count", "level", f"exactly one Flag required, found {flags}")

    if spawns == 1:
        sx, sy = level.spawn.cell
        below = (sx, sy - 1)
        supported = level.is_solid(sx, sy - 1) or any(
            isinstance(e, (UnstablePlatform, Door)) and below in level.entity_cells(e)
            for e in level.entities
        )
        if not supported:
            bad("spawn-support", "Spawn", f"no support beneath spawn cell ({sx}, {sy})")

    return out


# --- serialization ----------------------------------------------------------

_ENTITY_KINDS = {
    "platform": UnstablePlatform,
    "door": Door,
    "button": Button,
    "space_block": SpaceBlock,
    "spawn": Spawn,
    "flag": Flag,
}


def _entity_to_record(ent: Entity) -> dict:
    if isinstance(ent, UnstablePlatform):
        return {"kind": "platform", "id": ent.id, "cell": list(ent.cell)}
    if isinstance(ent, Door):
        return {
            "kind": "door",
            "id": ent.id,
            "cells": [list(c) for c in ent.cells],
            "open": ent.initially_open,
        }
    if isinstance(ent, Button):
        return {
            "kind": "button",
            "cell": list(ent.cell),
            "door": ent.door_id,
            "action": ent.action,
        }
    if isinstance(ent, SpaceBlock):
        return {"kind": "space_block", "id": ent.id, "rect": list(ent.rect)}
    if isinstance(ent, Spawn):
        return {"kind": "spawn", "cell": list(ent.cell)}
    if isinstance(ent, Flag):
        return {"kind": "flag", "cell": list(ent.cell)}
    raise LevelError(f"unknown entity {ent!r}")


def _record_to_entity(rec: dict) -> Entity:
    try:
        kind = rec["kind"]
    except (KeyError, TypeError):
        raise LevelError(f"entity record without a kind: {rec!r}") from None
    if kind == "platform":
        return UnstablePlatform(rec["id"], tuple(rec["cell"]))
    if kind == "door":
        return Door(rec["id"], tuple(tuple(c) for c in rec["cells"]), rec["open"])
    if kind == "button":
        return Button(tuple(rec["cell"]), rec["door"], rec["action"])
    if kind == "space_block":
        return SpaceBlock(rec["id"], tuple(rec["rect"]))
    if kind == "spawn":
        return Spawn(tuple(rec["cell"]))
    if kind == "flag":
        return Flag(tuple(rec["cell"]))
    raise LevelError(f"unknown entity kind {kind!r}")


def save_level(level: Level) -> str:
    """Serialize to the canonical JSON document (byte-stable field order,
    tiles written top row first)."""
    doc = {
        "variant": level.variant,
        "width": level.width,
        "height": level.height,
        "physics": {
            "J": level.physics.jump_rise,
            "D": level.physics.dash_length,
            "R": level.physics.reform_distance,
        },
        "tiles": list(reversed(level.tiles)),
        "entities": [_entity_to_record(e) for e in level.entities],
        "ports": {
            p.name: {"cell": list(p.cell), "dir": p.direction}
            for p in sorted(level.ports, key=lambda p: p.name)
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def load_level(document: str) -> Level:
    """Parse and validate a level document; raises LevelError on any
    schema or invariant violation."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise LevelError(f"bad level document: {exc}") from None
    try:
        physics = PhysicsParams(
            doc["physics"]["J"], doc["physics"]["D"], doc["physics"]["R"]
        )
        level = Level(
            width=doc["width"],
            height=doc["height"],
            tiles=tuple(reversed([str(r) for r in doc["tiles"]])),
            entities=tuple(_record_to_entity(r) for r in doc["entities"]),
            variant=doc["variant"],
            physics=physics,
            ports=tuple(
                Port(name, tuple(p["cell"]), p["dir"])
                for name, p in sorted(doc.get("ports", {}).items())
            ),
        )
    except (KeyError, TypeError) as exc:
        raise LevelError(f"bad level document: missing or malformed field ({exc})") from None
    for row in level.tiles:
        if set(row) - {SOLID, EMPTY}:
            raise LevelError(f"tile rows may contain only '#' and '.', got {row!r}")
    violations = validate_level(level)
    if violations:
        raise LevelError("invalid level: " + "; ".join(str(v) for v in violations))
    return level


# --- rendering --------------------------------------------------------------


def render_ascii(level: Level, state=None) -> str:
    """One character per cell, top row first.

    Legend: '#' solid, '.' empty, '=' unstable platform, 'D'/'d' door
    closed/open, 'B'/'b' open/close button, '*' space block, 'S' spawn,
    'F' flag, '@' player.  With a state, broken platforms render as empty
    and door glyphs follow the live door bits.
    """
    grid = [list(row) for row in level.tiles]

    def put(cell: Cell, ch: str):
        grid[cell[1]][cell[0]] = ch

    for ent in level.entities:
        if isinstance(ent, UnstablePlatform):
            broken = state is not None and (state.platform_broken >> ent.id) & 1
            put(ent.cell, EMPTY if broken else "=")
        elif isinstance(ent, Door):
            if state is not None:
                is_open = bool((state.door_open >> ent.id) & 1)
            else:
                is_open = ent.initially_open
            for cell in ent.cells:
                put(cell, "d" if is_open else "D")
        elif isinstance(ent, Button):
            put(ent.cell, "B" if ent.action == OPEN else "b")
        elif isinstance(ent, SpaceBlock):
            for cell in ent.cells:
                put(cell, "*")
        elif isinstance(ent, Spawn):
            put(ent.cell, "S")
        elif isinstance(ent, Flag):
            put(ent.cell, "F")

    if state is not None:
        put(state.position, "@")

    return "\n".join("".join(row) for row in reversed(grid))


# --- construction helper ----------------------------------------------------


class LevelBuilder:
    """Mutable construction buffer used by the gadget stamper and the
    compiler; starts all-solid and is carved empty cell by cell."""

    def __init__(self, width: int, height: int, variant: str = NP,
                 physics: PhysicsParams | None = None):
        self.width = width
        self.height = height
        self.variant = variant
        self.physics = physics or PhysicsParams()
        self.grid = [[SOLID] * width for _ in range(height)]
        self.entities: list[Entity] = []
        self.ports: list[Port] = []

    def carve(self, x: int, y: int):
        if not (0 < x < self.width - 1 and 0 < y < self.height - 1):
            raise LevelError(f"cannot carve boundary or out-of-bounds cell ({x}, {y})")
        self.grid[y][x] = EMPTY

    def carve_row(self, x0: int, x1: int, y: int):
        for x in range(x0, x1 + 1):
            self.carve(x, y)

    def carve_column(self, x: int, y0: int, y1: int):
        for y in range(y0, y1 + 1):
            self.carve(x, y)

    def is_carved(self, x: int, y: int) -> bool:
        return self.grid[y][x] == EMPTY

    def add(self, entity: Entity):
        self.entities.append(entity)

    def add_port(self, name: str, cell: Cell, direction: str):
        self.ports.append(Port(name, cell, direction))

    def build(self, validate: bool = True) -> Level:
        level = Level(
            width=self.width,
            height=self.height,
            tiles=tuple("".join(row) for row in self.grid),
            entities=tuple(self.entities),
            variant=self.variant,
            physics=self.physics,
            # canonical port order, so load(save(level)) == level
            ports=tuple(sorted(self.ports, key=lambda p: p.name)),
        )
        if validate:
            violations = validate_level(level)
            if violations:
                raise LevelError(
                    "built an invalid level: " + "; ".join(str(v) for v in violations)
                )
        return level


def with_ports(level: Level, ports: tuple[Port, ...]) -> Level:
    return replace(level, ports=ports)
