# Two particles heading at each other: they collide, or they trade places.
from scalefree import collide

classical = collide.simulate("classical", eta_threshold=1e-3, dt=1e-3)
print("classical:", classical.event, "at t =", round(classical.event_time, 6), "x =", round(classical.event_position, 6))

swap = collide.simulate("scale_free", eta_threshold=1e-3, dt=1e-3, t_end=2.0)
print("scale-free:", swap.event, "at x_A =", swap.event_position)
print("final positions A, B:", swap.final_position_A, swap.final_position_B)

# the samples around the swap
i = next(k for k, (_, a, _) in enumerate(swap.trajectory) if a > 1)
for t, a, b in swap.trajectory[i - 2 : i + 2]:
    print(f"  t={t:.4f}  x_A={a:.4f}  x_B={b:.4f}")

# stopping early means no event at all
print("t_end = 0.5:", collide.simulate(t_end=0.5).event)
