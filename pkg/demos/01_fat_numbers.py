# Fat numbers: a real core carrying a first-order halo, 1 +- eta.
from scalefree import fatnum
from scalefree.fatnum import FatReal

eta = 0.25
tp, tm = fatnum.t_plus(eta), fatnum.t_minus(eta)
print("t_+ =", tp, " t_- =", tm)

# products only add halos: (1 + a)(1 + b) = 1 + a + b, the ab term is dropped
print("t_+ * t_+ =", fatnum.mul(tp, tp))
print("t_+ * t_- =", fatnum.mul(tp, tm), "(back to a plain 1)")

# inversion flips the sign of the halo, so 1/t_+ reads as t_-
print("1/t_+ =", fatnum.invert(tp))

# powers scale the halo
print("t_+ ** 3 =", fatnum.power(tp, 3.0))
print("(1 + 0.001) ** -2 =", FatReal(1.0, 1e-3) ** -2)

# the expectation of a fat number is just its core
print("E[t_+] =", fatnum.expectation(tp))
