"""Rayleigh quotients ||P f_xi|| / ||f_xi|| at (p, alpha) = (4, 0) as |xi| -> 1.

The quotient rises toward the lower formula pi/2 but slowly: the deficit
behaves like 1/log(1/(1-|xi|^2)). A linear fit in that variable gives a
rough extrapolated limit.
"""

import math
import time

import numpy as np

from bergnorm.bounds import conjectured_norm, decomposition_norm_check, dostanic_value, rayleigh_quotient_f_xi
from bergnorm.projection import SpaceParams

prm = SpaceParams(4, 0)
radii = [0.9, 0.99, 0.999, 0.9995]
quot = []
for xa in radii:
    t0 = time.perf_counter()
    quot.append(rayleigh_quotient_f_xi(xa, prm))
    print(f"|xi| = {xa:<7g} quotient = {quot[-1]:.7f}  ({time.perf_counter() - t0:.1f} s)")

print(f"sqrt(2) = {dostanic_value(4):.7f}, pi/2 = {conjectured_norm(prm):.7f}")

inv_log = 1 / np.log(1 / (1 - np.square(radii)))
slope, limit = np.polyfit(inv_log, quot, 1)
print(f"linear fit in 1/log(1/(1-|xi|^2)): extrapolated limit {limit:.4f}")

# the pieces behind the quotient: Phi carries the growth, Psi and Upsilon stay bounded
for xa in radii[:3]:
    d = decomposition_norm_check(xa, prm)
    print(f"|xi| = {xa:<6g} phi/f = {d.phi_norm / d.f_norm:.6f} psi = {d.psi_norm:.4f} "
          f"upsilon = {d.upsilon_norm:.4f} residual = {d.residual:.1e}")
print(f"phi/f equals the lower formula: {math.isclose(d.phi_norm / d.f_norm, conjectured_norm(prm), rel_tol=1e-8)}")
