"""Run every verification suite and the counting report."""
from unicellular import SUITES, counting_report, run_suite

for name in SUITES:
    rep = run_suite(name)
    print(rep.summary())
    for note in rep.notes:
        print("   ", note)

for row in counting_report():
    print(row)
