# Cells that either divide in two or vanish at maturity.
from scalefree import cellsim

# a single lineage, generation by generation
pop = cellsim.new_population(seed=3)
for g in range(8):
    pop = cellsim.advance_generation(pop, 0.6)
    print(f"generation {pop.generation}: {len(pop)} cells")

if pop.cells:
    c = pop.cells[0]
    print("a daughter:", c, " eps == scale*clock:", abs(c.eps - c.scale * c.clock) < 1e-15)

# the extinction probability recursion q <- (1-p) + p q^2
print("\nq_g at p = 0.5:", [round(cellsim.extinction_oracle(0.5, g), 4) for g in range(11)])

# Monte Carlo against it
stats = cellsim.run_trials(0.5, 10, 20_000, master_seed=1)
for g in stats.generations:
    oracle = 1 - stats.oracle_extinction[g]
    print(f"g={g:2d} survival {stats.survival[g]:.4f} +- {stats.survival_se[g]:.4f}  oracle {oracle:.4f}  mean {stats.mean_population[g]:.3f}")
