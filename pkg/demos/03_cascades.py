# Two ways an infinitesimal grows: the golden-mean cascade and random scalings.
from fractions import Fraction

from scalefree import cascade

# deterministic: eta -> 1/(1 + eta), exact in rationals
state = cascade.CascadeState(Fraction(1))
for _ in range(10):
    cascade.golden_step(state)
print("rational iterates:", [str(x) for x in state.history])

value, steps = cascade.run_to_convergence(1.0, 5e-8)
print(f"float iterates reach {value!r} in {steps} steps; golden mean is {cascade.GOLDEN!r}")

# stochastic: every step rescales eta by a random alpha ~ U(0.9, 1.5)
moves = cascade.evolve_infinitesimal(1e-6, seed=7)
hit = cascade.first_crossing(moves, 1e-2)
print(f"\neta crosses 1e-2 at step {hit}, reaches 1 after {len(moves) - 1} records")
for m in moves[:6] + moves[hit - 1 : hit + 2] + moves[-2:]:
    print(f"  step {m.step:6d}  eta={m.eta:.3e}  side={m.side:+d}  {m.kind}")

# alpha = 1 exactly is pure inversion: eta never grows
stalled = cascade.evolve_infinitesimal(1e-6, cascade.Fixed(1.0), max_steps=50)
print("\nalpha = 1: final eta", stalled[-1].eta, "after", stalled[-1].step, "steps")

# over many seeds almost every run gets out
print("fraction reaching 1e-2:", cascade.threshold_fraction(2000, seed=1))
