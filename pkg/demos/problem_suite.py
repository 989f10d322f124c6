"""Write the THF suite and, if a registry is given, run it through provers.

    python3 demos/problem_suite.py OUTDIR [REGISTRY.json]
"""
import sys
from collections import Counter

from condhol.prover import format_report, load_registry, run_suite
from condhol.suite import gen_problem_suite, load_manifest

out = sys.argv[1] if len(sys.argv) > 1 else "suite_out"
manifest = gen_problem_suite(out)
print(f"{len(manifest)} problems in {out}:", dict(Counter(e["expected"] for e in manifest)))
print(open(f"{out}/P4_MPprime_fwd.p").read())

if len(sys.argv) > 2:
    report = run_suite(load_manifest(out), load_registry(sys.argv[2]))
    print(format_report(report))
