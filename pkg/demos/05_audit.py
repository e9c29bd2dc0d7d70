"""Recompute the published claims and list the ones that do not hold."""

from subchains.audit import run_audit

report = run_audit()
print(report.summary)
for e in report.entries:
    if e.status == "MISMATCH":
        print(f"{e.claim_id:<32} published {e.paper_value!s:<12} computed {e.computed_value}")
