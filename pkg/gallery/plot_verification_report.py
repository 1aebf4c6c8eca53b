"""
Verifying identities in bulk
============================

run_suite evaluates every identity across a grid of degrees and returns a
report that serialises to JSON or CSV. The same report is available from
the command line as ``hermitia verify``.
"""

# %%
from hermitia import run_suite

report = run_suite("gamma", [-0.5, 0.3, 0.5 + 0.5j, 2.0])
print(report.summary)
for c in report.checks:
    print(f"{c.name:18s} tau={c.tau}  {c.status:8s} {c.message}")

# %%
print(report.to_csv())

# %%
full = run_suite("all")
print(full.summary)
