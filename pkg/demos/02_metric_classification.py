"""
Hermitian metric classification
================================

For each bundled model's distinguished metrics we decide -- exactly --
whether the metric is Gauduchon, balanced, strongly Gauduchon, or locally
conformally Kaehler, and we compute its Lee form.
"""

from lgcone.cones import (
    NotLCK,
    is_balanced,
    is_gauduchon,
    is_strongly_gauduchon,
    lck_lee_form,
    lee_form,
)
from lgcone.models import all_models

for model in all_models():
    for label in sorted(model.metric_forms):
        metric = model.metric(label)
        print(f"== {model.name} / metric '{label}'")
        print("  omega =", metric.omega)

        # Gauduchon: d d^c (omega^(n-1)) = 0.  On these unimodular algebras
        # d vanishes identically in degree dim-1, so the answer is always
        # yes for invariant metrics -- the interesting classes are below.
        print("  gauduchon:", is_gauduchon(metric))
        print("  balanced:", is_balanced(metric))
        print("  strongly gauduchon:", is_strongly_gauduchon(metric))

        # the Lee form theta = (1/(n-1)) * star(d^c omega^(n-1)); its
        # codifferential vanishes exactly when the metric is Gauduchon
        theta = lee_form(metric)
        print("  lee form:", theta)
        print("  codifferential of lee form:", metric.codifferential(theta))

        # locally conformally Kaehler: d(omega) = theta ^ omega with theta
        # closed; the solver either produces theta or proves none exists
        try:
            result = lck_lee_form(metric)
            kind = "kaehler" if result.kaehler else "lck"
            print(f"  {kind}: theta = {result.theta}")
        except NotLCK:
            print("  lck: no")
        print()
