"""Exact verification of q-congruences modulo powers of cyclotomic polynomials."""

from .adhoc import CheckSpec, run_check
from .congruence import CongruenceResult, CycloFraction, Modulus, Reason, congruent, reduce_mod
from .expr import evaluate, parse, to_text
from .poly import IntPoly, RatFun, format_poly, format_ratfun
from .qseries import cyclotomic, euler_number, gauss_binom, q_int, q_trinomial, trinomial
from .statements import CHECKS, StatementId, VerificationReport, r_n, run_suite

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckSpec",
    "CongruenceResult",
    "CycloFraction",
    "IntPoly",
    "Modulus",
    "RatFun",
    "Reason",
    "StatementId",
    "VerificationReport",
    "congruent",
    "cyclotomic",
    "euler_number",
    "evaluate",
    "format_poly",
    "format_ratfun",
    "gauss_binom",
    "parse",
    "q_int",
    "q_trinomial",
    "r_n",
    "reduce_mod",
    "run_check",
    "run_suite",
    "to_text",
    "trinomial",
]
