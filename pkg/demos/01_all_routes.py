"""Tour of the seven routes to log A.

Runs every estimator at 50 digits and prints the cross-validation matrix.
The four integral routes land within ~1e-60 of each other; the limit and
accelerated-series routes carry ~1e-21 headroom; the Hasse partial sum is
the documented slow one (N^{-3/2} tail).

    python demos/01_all_routes.py
"""

import mpmath

from glaisher import make_context, run_all

ctx = make_context(50)
doc = run_all(ctx)

print(f"log A by seven routes at {ctx.precision_digits} digits\n")
for est in doc.estimates:
    params = ", ".join(f"{k}={v}" for k, v in est.parameters.items()) or "-"
    print(f"  {est.route_id:16s} {mpmath.nstr(est.value, 40)}")
    print(f"  {'':16s} error est {mpmath.nstr(est.error_estimate, 3)},"
          f" {est.evaluations} evaluations, params: {params}\n")

print("pairwise |difference|:")
ids = doc.agreement_matrix["routes"]
print(" " * 18 + "".join(f"{rid:>12.10s}" for rid in ids))
for rid, row in zip(ids, doc.agreement_matrix["matrix"]):
    print(f"  {rid:16s}" + "".join(f"{mpmath.nstr(v, 2):>12s}" for v in row))

print("\nidentity residuals:")
for res in doc.residuals:
    marker = "(control: must EXCEED tolerance)" if res.identity_id == "res2_measure_check" else ""
    print(f"  {res.identity_id:20s} {mpmath.nstr(res.residual, 4):>12s} {marker}")
