"""Conditional logic (selection-function semantics) embedded in simple type theory."""
from .syntax import (Atom, Neg, Or, And, Implies, Iff, Cond, Formula, FormulaSyntaxError,
                     parse_formula, format_formula, desugar)
from .semantics import SelectionModel, satisfies, proof_set, valid_in_model
from .correspondence import AxiomId, parse_claim, check_claim, claim_id
from .embedding import embed, vld_wrap

__version__ = "0.1.0"
