"""Re-check the three countermodels reported by Refute and Nitpick."""
from condhol import correspondence as corr
from condhol.cli import packaged_fixtures
from condhol.modelfile import load_fixture
from condhol.search import render_countermodel, verify_reported_model

for path in packaged_fixtures():
    fx = load_fixture(path)
    c = corr.parse_claim(fx.claim)
    v = corr.check_claim(c, fx.model)
    print(f"== {path.name}: {fx.claim}")
    print(render_countermodel(fx.model, fx.env, fx.state))
    print("genuine countermodel:", verify_reported_model(fx))
    if v.holds:
        # the 5(a) report: some premise is not valid once its variables range freely
        if isinstance(c, corr.Inclusion):
            for p in c.premises:
                pv = corr.check_claim(corr.Inclusion((), p, c.semantic), fx.model)
                if not pv.holds:
                    names = {k: fx.model.names(x) for k, x in pv.env.items()}
                    print(f"  premise {p} fails at {fx.model.states[pv.state]} with {names}")
    print()
