"""Two-sided bounds for ||P_alpha|| on L^p_alpha over a small (p, alpha) grid.

The lower formula Gamma((2+a)/p)Gamma((2+a)/q)/Gamma((2+a)/2)^2 is compared
with the maximal-projection norm (upper) and with csc(pi/p).
"""

import math

from bergnorm.bounds import conjectured_norm, dostanic_value, upper_bound_norm
from bergnorm.projection import SpaceParams

print(f"{'p':>5} {'alpha':>6} {'lower':>10} {'upper':>10} {'csc(pi/p)':>10}")
for p in (1.5, 2, 3, 4, 8):
    for alpha in (-0.9, 0, 1):
        prm = SpaceParams(p, alpha)
        print(f"{p:5g} {alpha:6g} {conjectured_norm(prm):10.6f} {upper_bound_norm(prm):10.6f} "
              f"{dostanic_value(p):10.6f}")

# as alpha -> -1 the lower formula tends to csc(pi/p)
for delta in (1e-1, 1e-2, 1e-3):
    gap = conjectured_norm(SpaceParams(4, -1 + delta)) - dostanic_value(4)
    print(f"p=4, alpha=-1+{delta:g}: lower - csc(pi/4) = {gap:.2e}")
print(f"p=4, alpha=0: lower = pi/2 = {math.pi / 2:.7f} > sqrt(2) = {math.sqrt(2):.7f}")
