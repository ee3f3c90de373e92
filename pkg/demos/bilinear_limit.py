"""Lower bound for the maximal projection from the test pair g_eps, h_eps.

<P# g_eps, h_eps> has a closed Gamma-product form; as eps -> 0 it climbs to
the norm of P#. At eps in {1, 0.1} the pairing is also integrated numerically.
"""

from bergnorm.bounds import EPS_SCHEDULE, bilinear_form_quadrature, bilinear_form_value, upper_bound_norm
from bergnorm.projection import SpaceParams

for p, alpha in ((2, 0), (3, 0), (2, 1)):
    prm = SpaceParams(p, alpha)
    upper = upper_bound_norm(prm)
    print(f"(p, alpha) = ({p}, {alpha}), norm of P# = {upper:.7f}")
    for eps in EPS_SCHEDULE:
        line = f"  eps = {eps:<6g} value = {bilinear_form_value(eps, prm):.7f}"
        if eps >= 0.1:
            quad = bilinear_form_quadrature(eps, prm)
            line += f"  quadrature = {quad.value:.7f} (|g| = {quad.g_norm:.8f}, |h| = {quad.h_norm:.8f})"
        print(line)
