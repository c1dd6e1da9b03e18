"""The PSPACE pipeline: quantified formulas with door-closing buttons.

A universal quantifier forces the player through the clause check twice,
once per polarity, before the way out opens; red (close) buttons make
door states non-monotone, which is exactly what the variant adds.
"""

from satplat.compiler import compile_qbf
from satplat.formula import parse_qdimacs, qbf_oracle
from satplat.level import render_ascii
from satplat.sim import replay_states, initial_state
from satplat.solver import Solvable, solve

qbf = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 2 0\n-1 -2 -2 0")
print("forall x1 exists x2: (x1|x2) & (~x1|~x2)  -- oracle says",
      qbf_oracle(qbf))

level = compile_qbf(qbf)
print(f"\ncompiled to {level.width}x{level.height}, variant {level.variant}:\n")
print(render_ascii(level))

result = solve(level)
assert isinstance(result, Solvable)
print(f"\nsolvable in {len(result.trace)} moves "
      f"({result.stats.states_visited} states searched)")

# door bits are non-monotone here: closing happens during the protocol
openings = closings = 0
prev = initial_state(level).door_open
for state in replay_states(level, result.trace):
    openings += bin(state.door_open & ~prev).count("1")
    closings += bin(prev & ~state.door_open).count("1")
    prev = state.door_open
print(f"along the witness: {openings} door openings, {closings} closings")

false_qbf = parse_qdimacs("p cnf 1 1\na 1 0\n1 0")
print("\nforall x1: (x1) compiles to:",
      type(solve(compile_qbf(false_qbf))).__name__)
