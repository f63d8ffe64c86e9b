"""Reports as decimal-string JSON and flat CSV.

Binary floats cannot carry 50 digits, so every number in the JSON report
is a decimal string at full context precision; parsing it back loses
nothing beyond the last two guard digits.  The CSV view is the flat
convergence-record table.

    python demos/08_report_serialization.py
"""

import mpmath

from glaisher import (
    convergence_study,
    deserialize_report,
    make_context,
    run_all,
    serialize,
)

ctx = make_context(50)
doc = run_all(ctx, ["feaux", "kummer"])
doc.convergence_records = convergence_study("limit", [16, 32, 64], ctx,
                                            params={"limit_order": 0})

raw = serialize(doc, "json")
print(f"JSON report: {len(raw)} bytes; first lines:\n")
print("\n".join(raw.decode().splitlines()[:14]))

back = deserialize_report(raw, ctx)
with ctx.workdps(10):
    drift = max(
        abs(a.value - b.value)
        for a, b in zip(back.estimates, doc.estimates)
    )
print(f"\nround-trip value drift: {mpmath.nstr(drift, 3)} "
      f"(contract: < 1e-{ctx.precision_digits - 2})")

print("\nCSV view:\n")
print(serialize(doc, "csv").decode())
