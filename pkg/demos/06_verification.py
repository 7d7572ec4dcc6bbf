"""Driving the verification suites from Python.

Every quantitative statement the library rests on is packaged as a named
suite of pass/fail cases. The command line runs them (`gvs verify`,
`gvs report`); this demo does the same in-process: list the registry, run
two fast suites, and write the case table as CSV.
"""

import csv
import io

from gvs import CSV_HEADER, SuiteConfig, csv_rows, run_suite, suite_ids

print("registered suites:")
ids = suite_ids()
for i in range(0, len(ids), 4):
    print("  " + ", ".join(ids[i : i + 4]))

print()
print("running two of the fast ones")
results = [run_suite(sid, SuiteConfig(seed=0)) for sid in ("lemma-moment", "holder")]
for res in results:
    n_pass = sum(c.passed for c in res.cases)
    print(f"  {res.suite_id:<14} {n_pass}/{len(res.cases)} cases in {res.wall_time:.2f}s"
          f"   claim: {res.anchor[:60]}...")

print()
print("the same cases as a CSV table (first rows)")
buf = io.StringIO()
writer = csv.writer(buf)
writer.writerow(CSV_HEADER)
for row in csv_rows(results):
    writer.writerow(row)
lines = buf.getvalue().splitlines()
for line in lines[:5]:
    print("  " + line)
print(f"  ... {len(lines) - 1} data rows total")

print()
print("equivalent command lines:")
print("  gvs verify lemma-moment holder --seed 0")
print("  gvs report lemma-moment holder --csv cases.csv")
