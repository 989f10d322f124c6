"""Status of every claim on all models with at most two states.

THM here means no counterexample among all 1- and 2-state models, which
is evidence, not proof.  CSA comes with a verified countermodel.
"""
import time

from condhol import correspondence as corr
from condhol.search import SearchBudget, find_countermodel
from condhol.suite import SUITE

budget = SearchBudget(max_states=2, exhaustive_up_to=2, random_samples=0)
expected = {e.claim: e.expected for e in SUITE}

print(f"{'claim':<18} {'table':<8} {'found':<6} {'states':>6} {'seconds':>8}")
for cid in corr.ALL_CLAIM_IDS:
    t0 = time.perf_counter()
    r = find_countermodel(corr.parse_claim(cid), budget)
    status = "CSA" if r.found else "THM"
    size = r.model.size if r.found else "-"
    want = expected[cid]
    note = "" if want in (status, "Unknown") else "  <-- differs"
    print(f"{cid:<18} {want:<8} {status:<6} {size:>6} {time.perf_counter() - t0:>8.2f}{note}")
