"""Stampable gadget blueprints with reachability contracts.

Each blueprint is a self-contained tile patch plus entity records using
blueprint-local ids, named boundary ports, and a list of contract
assertions that must hold when the blueprint is stamped alone into an
otherwise solid level.  Geometry is calibrated to the default physics
(jump rise 3, dash length 4, reform distance 2).

Conventions used throughout the blueprints:

- corridors are 1 tile tall, so a button in a corridor can only be
  crossed by a dash (which fires it);
- a "valve" is the inline sequence [open button][door][close button]:
  crossing it forward opens, passes and re-closes the door, while
  entering it backward is stopped by the closed door;
- one-way drops are 1-wide shafts deeper than the jump rise.
"""

from __future__ import annotations

from dataclasses import dataclass

from satplat.level import (
    CLOSE,
    NP,
    OPEN,
    PSPACE,
    Button,
    Door,
    Flag,
    Level,
    LevelBuilder,
    LevelError,
    Port,
    SpaceBlock,
    Spawn,
    UnstablePlatform,
)

LOCAL = "local"
EXT = "ext"


@dataclass(frozen=True)
class BDoor:
    local_id: int
    cells: tuple[tuple[int, int], ...]
    initially_open: bool = False


@dataclass(frozen=True)
class BPlatform:
    local_id: int
    cell: tuple[int, int]


@dataclass(frozen=True)
class BBlock:
    local_id: int
    rect: tuple[int, int, int, int]


@dataclass(frozen=True)
class BButton:
    cell: tuple[int, int]
    ref: tuple[str, int]  # (LOCAL, blueprint door id) or (EXT, global door id)
    action: str = OPEN


@dataclass(frozen=True)
class Assertion:
    """port-pair reachability, optionally conditioned on door/platform bits
    (blueprint-local ids)."""

    from_port: str
    to_port: str
    reachable: bool
    doors: tuple[tuple[int, bool], ...] = ()
    platforms: tuple[tuple[int, bool], ...] = ()
    note: str = ""


@dataclass(frozen=True)
class GadgetBlueprint:
    kind: str
    width: int
    height: int
    rows: tuple[str, ...]  # bottom row first
    doors: tuple[BDoor, ...] = ()
    platforms: tuple[BPlatform, ...] = ()
    blocks: tuple[BBlock, ...] = ()
    buttons: tuple[BButton, ...] = ()
    ports: tuple[Port, ...] = ()
    contract: tuple[Assertion, ...] = ()
    variant: str = NP  # minimum variant the patch needs (CLOSE buttons -> PSPACE)
    notes: str = ""

    def port(self, name: str) -> Port:
        for p in self.ports:
            if p.name == name:
                return p
        raise LevelError(f"blueprint {self.kind} has no port {name!r}")

    def external_door_ids(self) -> list[int]:
        seen = []
        for b in self.buttons:
            if b.ref[0] == EXT and b.ref[1] not in seen:
                seen.append(b.ref[1])
        return seen


def _grid(width: int, height: int) -> list[list[str]]:
    return [["#"] * width for _ in range(height)]


def _freeze(grid: list[list[str]]) -> tuple[str, ...]:
    return tuple("".join(row) for row in grid)


def _from_art(art: list[str]) -> tuple[str, ...]:
    """Rows given top-first, as drawn; stored bottom-first."""
    return tuple(art[::-1])


# --- stamping ---------------------------------------------------------------


class StampError(LevelError):
    pass


def stamp_into(builder: LevelBuilder, bp: GadgetBlueprint, origin: tuple[int, int],
               door_offset: int = 0, plat_offset: int = 0, block_offset: int = 0,
               prefix: str = "") -> None:
    """Apply a blueprint patch to a builder. Every target cell must still
    be solid (stamps may abut but never overlap carved content)."""
    ox, oy = origin
    if ox < 0 or oy < 0 or ox + bp.width > builder.width or oy + bp.height > builder.height:
        raise StampError(f"{bp.kind} at {origin} does not fit the grid")
    for y in range(bp.height):
        for x in range(bp.width):
            if builder.is_carved(ox + x, oy + y):
                raise StampError(f"{bp.kind} at {origin} overlaps carved cell {(ox + x, oy + y)}")
    existing_doors = {e.id for e in builder.entities if isinstance(e, Door)}
    for d in bp.doors:
        if d.local_id + door_offset in existing_doors:
            raise StampError(f"door id collision at offset {door_offset}")
    for y in range(bp.height):
        row = bp.rows[y]
        for x in range(bp.width):
            if row[x] == ".":
                builder.carve(ox + x, oy + y)
    for d in bp.doors:
        builder.add(Door(d.local_id + door_offset,
                         tuple((ox + x, oy + y) for x, y in d.cells),
                         d.initially_open))
    for p in bp.platforms:
        builder.add(UnstablePlatform(p.local_id + plat_offset,
                                     (ox + p.cell[0], oy + p.cell[1])))
    for blk in bp.blocks:
        x0, y0, x1, y1 = blk.rect
        builder.add(SpaceBlock(blk.local_id + block_offset,
                               (ox + x0, oy + y0, ox + x1, oy + y1)))
    for b in bp.buttons:
        door_id = b.ref[1] + door_offset if b.ref[0] == LOCAL else b.ref[1]
        builder.add(Button((ox + b.cell[0], oy + b.cell[1]), door_id, b.action))
    for port in bp.ports:
        builder.add_port(prefix + port.name,
                         (ox + port.cell[0], oy + port.cell[1]), port.direction)


def stamp(level: Level, bp: GadgetBlueprint, origin: tuple[int, int],
          id_offset: int = 0, prefix: str = "") -> Level:
    """Pure stamping: returns a new Level with the patch applied and local
    ids shifted by id_offset."""
    builder = LevelBuilder(level.width, level.height, level.variant, level.physics)
    for y in range(level.height):
        for x in range(level.width):
            if level.tiles[y][x] == ".":
                builder.grid[y][x] = "."
    builder.entities = list(level.entities)
    builder.ports = list(level.ports)
    stamp_into(builder, bp, origin, id_offset, id_offset, id_offset, prefix)
    return builder.build(validate=False)


def contract_level(bp: GadgetBlueprint) -> tuple[Level, int]:
    """Stamp a blueprint alone into an otherwise-solid level (1-cell
    margin).  External door references get parked 1-cell doors in sealed
    pockets above the patch so the level validates and their bits are
    observable; local door ids are shifted past the external ones.
    Returns (level, local_door_offset)."""
    ext = bp.external_door_ids()
    extra_h = 3 if ext else 0
    width = max(bp.width + 2, 2 * len(ext) + 3)
    builder = LevelBuilder(width, bp.height + 2 + extra_h, bp.variant)
    door_offset = max(ext) + 1 if ext else 0
    stamp_into(builder, bp, (1, 1), door_offset=door_offset)
    for i, door_id in enumerate(ext):
        cell = (1 + 2 * i, bp.height + 2)
        builder.carve(*cell)
        builder.add(Door(door_id, (cell,), False))
    anchor = bp.ports[0].cell
    goal = bp.ports[-1].cell
    builder.add(Spawn((anchor[0] + 1, anchor[1] + 1)))
    builder.add(Flag((goal[0] + 1, goal[1] + 1)))
    return builder.build(), door_offset


def check_contract(bp: GadgetBlueprint):
    """Run every contract assertion on the isolated stamped blueprint.
    Yields (assertion, passed) pairs."""
    from satplat.solver import reachable_ports

    level, door_offset = contract_level(bp)
    for a in bp.contract:
        overrides = {
            "doors": {i + door_offset: v for i, v in a.doors},
            "platforms": {i: v for i, v in a.platforms},
        }
        reached = reachable_ports(level, a.from_port, overrides)
        passed = (a.to_port in reached) == a.reachable
        yield a, passed


# --- the gadgets ------------------------------------------------------------


def build_variable_gadget(var: int) -> GadgetBlueprint:
    """One-way binary choice chamber.

    The player drops in from the entry, walks onto one of two unstable
    platforms sealing the floor exits, falls through as it breaks, and the
    platform reforms overhead: the other exit and the entry become
    unreachable.  Platform 0 seals exit_true (left), platform 1 seals
    exit_false (right).
    """
    rows = _from_art([
        "#########",
        ".........",  # y6: entry row (port at x=0)
        "##.......",  # y5: ledge under the entry
        "#........",  # y4: chamber floor walkway
        "#.#####..",  # y3: floor with two platform holes
        "#.#####..",  # y2: commit shafts
        "..#####..",  # y1: exit row (ports at x=0 and x=8)
        "#########",
    ])
    # Fix the border cells that the art leaves open for clarity.
    grid = [list(r) for r in rows]
    for y in range(8):
        for x in (0, 8):
            grid[y][x] = "#"
    grid[6][0] = "."  # entry port
    grid[1][0] = "."  # exit_true port
    grid[1][8] = "."  # exit_false port
    return GadgetBlueprint(
        kind="variable",
        width=9,
        height=8,
        rows=_freeze(grid),
        platforms=(BPlatform(0, (1, 3)), BPlatform(1, (7, 3))),
        ports=(
            Port("entry", (0, 6), "E"),
            Port("exit_true", (0, 1), "W"),
            Port("exit_false", (8, 1), "E"),
        ),
        contract=(
            Assertion("entry", "exit_true", True, note="fresh choice, true side"),
            Assertion("entry", "exit_false", True, note="fresh choice, false side"),
            Assertion("exit_true", "exit_false", False, note="committed true seals false"),
            Assertion("exit_true", "entry", False, note="no way back up"),
            Assertion("exit_false", "exit_true", False),
            Assertion("exit_false", "entry", False),
        ),
        notes=f"binary choice for variable {var}; exits sealed by unstable platforms",
    )


def _clause_wall(grid: list[list[str]], wall_x: int) -> None:
    """Carve a 3-door check wall column into a 5-row corridor grid."""
    for y in (1, 2, 3):
        grid[y][wall_x] = "."
    grid[4][wall_x] = "#"


def build_clause_gadget(clause_index: int, literals=None) -> GadgetBlueprint:
    """Check corridor blocked by three stacked doors; passable iff at
    least one is open (walk through the bottom door, or jump into an open
    upper door and rest on the closed one beneath)."""
    w, h = 7, 5
    grid = _grid(w, h)
    for x in range(0, w):
        grid[1][x] = "."
    for x in (1, 2, 4, 5):
        grid[2][x] = "."
        grid[3][x] = "."
    _clause_wall(grid, 3)
    combos = []
    for mask in range(8):
        bits = tuple((s, bool((mask >> s) & 1)) for s in range(3))
        combos.append(Assertion("check_in", "check_out", any(v for _, v in bits),
                                doors=bits, note=f"door mask {mask:03b}"))
    return GadgetBlueprint(
        kind="clause",
        width=w,
        height=h,
        rows=_freeze(grid),
        doors=(
            BDoor(0, ((3, 1),)),
            BDoor(1, ((3, 2),)),
            BDoor(2, ((3, 3),)),
        ),
        ports=(Port("check_in", (0, 1), "E"), Port("check_out", (6, 1), "E")),
        contract=tuple(combos),
        notes=f"clause {clause_index}: slot doors 0..2 bottom-up, OR semantics",
    )


def build_tunnel(literal=None, button_door_ids=()) -> GadgetBlueprint:
    """1-tall corridor with one OPEN button per target door; buttons block
    walking, so every traversal dashes through (and fires) all of them."""
    m = len(button_door_ids)
    w = max(3, m + 4)
    grid = _grid(w, 3)
    for x in range(0, w):
        grid[1][x] = "."
    buttons = tuple(
        BButton((2 + i, 1), (EXT, door_id), OPEN)
        for i, door_id in enumerate(button_door_ids)
    )
    return GadgetBlueprint(
        kind="tunnel",
        width=w,
        height=3,
        rows=_freeze(grid),
        buttons=buttons,
        ports=(Port("tunnel_in", (0, 1), "E"), Port("tunnel_out", (w - 1, 1), "E")),
        contract=(
            Assertion("tunnel_in", "tunnel_out", True),
            Assertion("tunnel_out", "tunnel_in", True),
        ),
        notes=f"literal tunnel, {m} forced buttons",
    )


def build_crossover() -> GadgetBlueprint:
    """Two paths cross through a plus of space blocks without leakage.

    The horizontal path dashes straight through the 3-wide block; the
    vertical path falls onto the block top and dashes straight down
    (chaining through both blocks), or dashes up from below.  Walls seal
    every diagonal line, and off-axis dashes out of the blocks die on
    solid exits.
    """
    rows = _from_art([
        "###########",
        "#.........#",  # y9 headroom of the top corridor
        "..........#",  # y8 top corridor, B1 port at x=0
        "#####.#####",  # y7 shaft
        "#####.#####",  # y6 rest cell on the horizontal block
        "...........",  # y5 A corridor with block cells at x=4..6
        "#####.#####",  # y4 vertical block top
        "#####.#####",  # y3
        "#####.#####",  # y2 vertical block bottom
        "#####.#####",  # y1 launch cell
        "#####.#####",  # y0 B2 port at x=5
    ])
    pairs = []
    for a in ("A1", "A2"):
        for b in ("B1", "B2"):
            pairs.append(Assertion(a, b, False, note="no A-to-B leakage"))
            pairs.append(Assertion(b, a, False, note="no B-to-A leakage"))
    return GadgetBlueprint(
        kind="crossover",
        width=11,
        height=11,
        rows=rows,
        blocks=(BBlock(0, (4, 5, 6, 5)), BBlock(1, (5, 2, 5, 4))),
        ports=(
            Port("A1", (0, 5), "E"),
            Port("A2", (10, 5), "W"),
            Port("B1", (0, 8), "E"),
            Port("B2", (5, 0), "S"),
        ),
        contract=(
            Assertion("A1", "A2", True),
            Assertion("A2", "A1", True),
            Assertion("B1", "B2", True),
            Assertion("B2", "B1", True),
            *pairs,
        ),
        notes="space-block crossover; vertical traffic chains through both blocks",
    )


def build_final_passage(num_clauses: int) -> GadgetBlueprint:
    """The clause check walls composed in series along one corridor;
    passable end to end iff every clause has at least one open door.
    Door local ids are 3*clause + slot."""
    k = num_clauses
    w = max(3, 4 * k + 3)
    grid = _grid(w, 5)
    for x in range(0, w):
        grid[1][x] = "."
    for x in range(1, w - 1):
        grid[2][x] = "."
        grid[3][x] = "."
    doors = []
    for c in range(k):
        wall_x = 3 + 4 * c
        _clause_wall(grid, wall_x)
        for s in range(3):
            doors.append(BDoor(3 * c + s, ((wall_x, 1 + s),)))
    contract = [
        Assertion("passage_in", "flag_port", k == 0,
                  note="all doors closed" if k else "empty passage"),
    ]
    if k:
        one_per_clause = tuple((3 * c, True) for c in range(k))
        contract.append(Assertion("passage_in", "flag_port", True,
                                  doors=one_per_clause, note="one door open per clause"))
        all_but_last = tuple((3 * c, True) for c in range(k - 1))
        contract.append(Assertion("passage_in", "flag_port", False,
                                  doors=all_but_last, note="one clause fully closed"))
    return GadgetBlueprint(
        kind="final_passage",
        width=w,
        height=5,
        rows=_freeze(grid),
        doors=tuple(doors),
        ports=(Port("passage_in", (0, 1), "E"), Port("flag_port", (w - 1, 1), "E")),
        contract=tuple(contract),
        notes=f"{k} clause walls in series",
    )


def build_door_gadget(door_id: int = 0) -> GadgetBlueprint:
    """Three stacked corridors around one door: an open path and a close
    path each blocked by a forced button, and a traverse path crossing the
    door itself."""
    w = 9
    grid = _grid(w, 7)
    for y in (1, 3, 5):
        for x in range(0, w):
            grid[y][x] = "."
    return GadgetBlueprint(
        kind="door_gadget",
        width=w,
        height=7,
        rows=_freeze(grid),
        doors=(BDoor(door_id, ((4, 1),)),),
        buttons=(
            BButton((4, 3), (LOCAL, door_id), OPEN),
            BButton((4, 5), (LOCAL, door_id), CLOSE),
        ),
        ports=(
            Port("traverse_in", (0, 1), "E"),
            Port("traverse_out", (8, 1), "E"),
            Port("open_in", (0, 3), "E"),
            Port("open_out", (8, 3), "E"),
            Port("close_in", (0, 5), "E"),
            Port("close_out", (8, 5), "E"),
        ),
        contract=(
            Assertion("traverse_in", "traverse_out", False, note="door closed"),
            Assertion("traverse_in", "traverse_out", True, doors=((door_id, True),)),
            Assertion("open_in", "open_out", True),
            Assertion("close_in", "close_out", True),
            Assertion("open_in", "traverse_in", False, note="paths are isolated"),
        ),
        variant=PSPACE,
        notes="pressure-button door: forced open path, gated traverse, forced close path",
    )


def build_multi_tunnel(symbols=()) -> GadgetBlueprint:
    """Corridor of forced buttons applying (door, action) symbols in
    order; a traversal cannot skip any of them."""
    m = len(symbols)
    w = max(3, m + 4)
    grid = _grid(w, 3)
    for x in range(0, w):
        grid[1][x] = "."
    buttons = tuple(
        BButton((2 + i, 1), (EXT, door_id), action)
        for i, (door_id, action) in enumerate(symbols)
    )
    variant = PSPACE if any(a == CLOSE for _, a in symbols) else NP
    return GadgetBlueprint(
        kind="multi_tunnel",
        width=w,
        height=3,
        rows=_freeze(grid),
        buttons=buttons,
        ports=(Port("in", (0, 1), "E"), Port("out", (w - 1, 1), "E")),
        contract=(Assertion("in", "out", True),),
        variant=variant,
        notes=f"{m} forced symbols in order",
    )


def build_exists_gadget(var: int, true_symbols=(), false_symbols=()) -> GadgetBlueprint:
    """One-time (per forward entry) binary choice.

    Two lanes leave a junction: the ground lane commits the variable to
    true, the upper lane to false.  Each lane ends in a valve, so a lane
    can only be crossed forward and exactly one full symbol list is
    applied before the merged exit.  The return path is a plain corridor.
    Symbol lists must put OPEN symbols before CLOSE symbols.
    """
    s = max(len(true_symbols), len(false_symbols))
    me = 7 + s  # merge column
    w = me + 2
    grid = _grid(w, 10)
    for x in range(0, w):
        grid[1][x] = "."  # ground lane + ports
        grid[8][x] = "."  # return corridor + ports
    for x in range(1, me + 1):
        grid[4][x] = "."  # upper lane
    for y in (2, 3):
        grid[y][1] = "."  # junction climb
        grid[y][me] = "."  # merge drop

    buttons: list[BButton] = []

    def lay(y: int, syms, valve_door: int):
        x = 3
        for door_ref, action in syms:
            buttons.append(BButton((x, y), door_ref, action))
            x += 1
        buttons.append(BButton((x, y), (LOCAL, valve_door), OPEN))
        buttons.append(BButton((x + 2, y), (LOCAL, valve_door), CLOSE))
        return ((x + 1, y),)  # the valve door cell

    true_door_cells = lay(1, [((EXT, d), a) for d, a in true_symbols], 0)
    false_door_cells = lay(4, [((EXT, d), a) for d, a in false_symbols], 1)

    variant = PSPACE  # valves use CLOSE buttons
    return GadgetBlueprint(
        kind="exists",
        width=w,
        height=10,
        rows=_freeze(grid),
        doors=(BDoor(0, true_door_cells), BDoor(1, false_door_cells)),
        buttons=tuple(buttons),
        ports=(
            Port("q_in", (0, 1), "E"),
            Port("q_out", (w - 1, 1), "E"),
            Port("ret_in", (w - 1, 8), "W"),
            Port("ret_out", (0, 8), "W"),
        ),
        contract=(
            Assertion("q_in", "q_out", True, note="fresh: some branch commits"),
            Assertion("ret_in", "ret_out", True, note="return is a plain corridor"),
            Assertion("ret_out", "ret_in", True),
            Assertion("q_in", "ret_out", False, note="forward and return are isolated"),
            Assertion("q_out", "q_in", False, note="exit is sealed behind the valves"),
        ),
        variant=variant,
        notes=f"existential choice for variable {var}; ground lane = true, upper lane = false",
    )


def build_forall_gadget(var: int, true_symbols=(), false_symbols=()) -> GadgetBlueprint:
    """Forced two-pass quantifier.

    Forward pass: a tunnel applies the true configuration, closes the
    exhaust gate FX, opens the flip gate FT, and exits through a valve.
    First return: the return corridor has a pit that drops the player in
    front of the flip gate; while FT is open the only way on is the flip
    tunnel, which applies the false configuration, swaps the gates and
    reroutes the player forward (a drop onto the reroute ledge).  Second
    return: FT is closed, the player climbs out of the pit, passes the
    now-open FX gate (re-closing it behind: the gadget is reset) and
    continues outward.

    Local doors: 0 forward valve, 1 FT (flip gate), 2 FX (exhaust gate),
    3 flip valve.
    """
    s_t, s_f = len(true_symbols), len(false_symbols)
    fc = 5  # pit column in the return corridor
    w = max(s_t + 9, fc + s_f + 10, 14)
    dsx = w - 2  # flip tunnel drop column
    grid = _grid(w, 10)
    for x in range(0, w):
        grid[1][x] = "."  # forward tunnel + ports
        grid[8][x] = "."  # return corridor + ports
    for x in range(fc, dsx + 1):
        grid[5][x] = "."  # flip tunnel
    for x in range(dsx, w):
        grid[3][x] = "."  # reroute ledge + port
    grid[4][dsx] = "."  # flip tunnel drop
    grid[6][fc] = "."  # pit climb shaft
    grid[7][fc] = "."

    buttons: list[BButton] = []
    # forward tunnel: [true symbols, -FX, +FT, +V, V, -V]
    x = 2
    for d, a in true_symbols:
        buttons.append(BButton((x, 1), (EXT, d), a))
        x += 1
    buttons.append(BButton((x, 1), (LOCAL, 2), CLOSE))
    buttons.append(BButton((x + 1, 1), (LOCAL, 1), OPEN))
    buttons.append(BButton((x + 2, 1), (LOCAL, 0), OPEN))
    fwd_valve_cell = (x + 3, 1)
    buttons.append(BButton((x + 4, 1), (LOCAL, 0), CLOSE))

    # flip tunnel: [FT gate, false symbols, -FT, +FX, +V, V, -V] then the drop
    ft_cell = (fc + 1, 5)
    x = fc + 2
    for d, a in false_symbols:
        buttons.append(BButton((x, 5), (EXT, d), a))
        x += 1
    buttons.append(BButton((x, 5), (LOCAL, 1), CLOSE))
    buttons.append(BButton((x + 1, 5), (LOCAL, 2), OPEN))
    buttons.append(BButton((x + 2, 5), (LOCAL, 3), OPEN))
    flip_valve_cell = (x + 3, 5)
    buttons.append(BButton((x + 4, 5), (LOCAL, 3), CLOSE))
    if x + 4 >= dsx:
        raise LevelError("forall gadget too narrow for its flip tunnel")

    # return corridor: [ret_out ... -FX, FX gate ... pit ... ret_in]
    buttons.append(BButton((2, 8), (LOCAL, 2), CLOSE))
    fx_cell = (3, 8)

    return GadgetBlueprint(
        kind="forall",
        width=w,
        height=10,
        rows=_freeze(grid),
        doors=(
            BDoor(0, (fwd_valve_cell,)),
            BDoor(1, (ft_cell,)),
            BDoor(2, (fx_cell,)),
            BDoor(3, (flip_valve_cell,)),
        ),
        buttons=tuple(buttons),
        ports=(
            Port("q_in", (0, 1), "E"),
            Port("q_out", (w - 1, 1), "E"),
            Port("ret_in", (w - 1, 8), "W"),
            Port("ret_out", (0, 8), "W"),
            Port("reroute_out", (w - 1, 3), "E"),
        ),
        contract=(
            Assertion("q_in", "q_out", True, note="fresh forward pass"),
            Assertion("ret_in", "ret_out", False, note="fresh: both gates closed"),
            Assertion("ret_in", "reroute_out", False, note="fresh: flip gate closed"),
            Assertion("ret_in", "reroute_out", True, doors=((1, True),),
                      note="flip gate open: forced through the flip tunnel"),
            Assertion("ret_in", "ret_out", False, doors=((1, True),),
                      note="flip gate open: cannot skip the flip"),
            Assertion("ret_in", "ret_out", True, doors=((2, True),),
                      note="exhaust gate open: pass through outward"),
            Assertion("q_in", "ret_out", False, note="bands are isolated"),
        ),
        variant=PSPACE,
        notes=f"universal quantifier for variable {var}: true pass, forced flip, exhaust",
    )


def build_elevator(lift: int = 7) -> GadgetBlueprint:
    """Vertical connector: dash up through a space-block column, land on
    its top, hop off onto the upper ledge.  Two-way (dashing back down is
    allowed); used where the layout needs repeatable ascent."""
    if lift < 4:
        raise LevelError("elevator lift must be at least 4")
    h = lift + 3
    w = 5
    grid = _grid(w, h)
    for x in (1, 2):
        grid[1][x] = "."
    grid[1][0] = "."  # elev_in port
    grid[2][2] = "."
    for y in range(3, lift + 1):
        grid[y][2] = "."  # block column
    top = lift + 1
    for x in (0, 1, 2, 3):
        grid[top][x] = "."
    grid[top + 1][2] = "."  # jump headroom over the block top
    grid[top + 1][1] = "."
    return GadgetBlueprint(
        kind="elevator",
        width=w,
        height=h,
        rows=_freeze(grid),
        blocks=(BBlock(0, (2, 3, 2, lift)),),
        ports=(Port("elev_in", (0, 1), "E"), Port("elev_out", (0, top), "W")),
        contract=(
            Assertion("elev_in", "elev_out", True),
            Assertion("elev_out", "elev_in", True, note="two-way by design"),
        ),
        notes=f"space-block lift of {lift - 1} rows",
    )


ALL_GADGET_BUILDERS = {
    "variable": lambda: build_variable_gadget(1),
    "clause": lambda: build_clause_gadget(0),
    "tunnel": lambda: build_tunnel(None, (0, 1)),
    "crossover": build_crossover,
    "final_passage": lambda: build_final_passage(2),
    "door_gadget": lambda: build_door_gadget(0),
    "multi_tunnel": lambda: build_multi_tunnel(((0, OPEN), (0, CLOSE))),
    "exists": lambda: build_exists_gadget(1, ((0, OPEN),), ((0, CLOSE),)),
    "forall": lambda: build_forall_gadget(1, ((0, OPEN),), ((0, CLOSE),)),
    "elevator": build_elevator,
}


def catalog() -> str:
    """Human-readable dump of every gadget kind, its ports and contract."""
    lines = []
    for kind, builder in ALL_GADGET_BUILDERS.items():
        bp = builder()
        lines.append(f"{kind} ({bp.width}x{bp.height}, variant {bp.variant})")
        lines.append(f"  {bp.notes}")
        for p in bp.ports:
            lines.append(f"  port {p.name} at {p.cell} heading {p.direction}")
        for a in bp.contract:
            cond = ""
            if a.doors:
                cond = " given doors " + ", ".join(f"{i}={'open' if v else 'closed'}"
                                                   for i, v in a.doors)
            if a.platforms:
                cond += " given platforms " + ", ".join(f"{i}={'broken' if v else 'intact'}"
                                                        for i, v in a.platforms)
            verdict = "REACHABLE" if a.reachable else "UNREACHABLE"
            note = f"  [{a.note}]" if a.note else ""
            lines.append(f"  contract {a.from_port} -> {a.to_port}: {verdict}{cond}{note}")
        lines.append("")
    return "\n".join(lines)
