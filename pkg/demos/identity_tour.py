"""Closed forms of weighted kernel integrals against their quadrature oracles."""

import numpy as np

from bergnorm import identities as ids

rule = ids.default_rule(0.0)
print("int t^{c-1}(1-t)^{d-1} 2F1(a,b;c;t) dt:", ids.beta_hyp_check(0.5, 0.5, 1, 1))
print("int (1-|w|^2)^t / |1 - z conj w|^{2a} dA:", ids.kernel_power_check(0.5, 1, 0, rule))
print("three-kernel series vs quadrature:", ids.three_kernel_check(0.3, 0.5j, 1, 1, 1, 0, rule=rule))
print("nested double integral:", ids.double_integral_check(1, 1, 1))
print("sup of the normalised kernel integral:", ids.sup_value_check(2, 0))
for c in (-1, 0, 1):
    print(f"growth class at c = {c:+d}:", ids.forelli_rudin_classify(0, c).value)

rng = np.random.default_rng(0)
errs = [ids.kernel_power_check(r * np.exp(1j * th), a, 0, rule).abs_diff
        for r, th, a in zip(rng.uniform(0, 0.8, 20), rng.uniform(0, 6.28, 20), rng.uniform(-1, 3, 20))]
print(f"largest error over 20 random kernel integrals: {max(errs):.1e}")
