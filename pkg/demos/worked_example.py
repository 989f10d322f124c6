"""p => p is not valid in CK: embed it, normalize, and find the countermodel."""
from condhol import hol
from condhol.embedding import embed, vld_wrap
from condhol.search import find_countermodel, render_countermodel
from condhol.suite import validity_problem
from condhol.syntax import format_formula, parse_formula
from condhol.thf import emit_thf

f = parse_formula("p => p")
print("formula:     ", format_formula(f))
print("embedded:    ", hol.format_term(embed(f)))
print("normal form: ", hol.format_term(hol.normalize(vld_wrap(embed(f)))))
print()
print(emit_thf(validity_problem(f, "p_cond_p")))

r = find_countermodel(f)
print(f"countermodel with {r.model.size} state(s), {r.models_checked} models checked:")
print(render_countermodel(r.model, r.env, r.state))
