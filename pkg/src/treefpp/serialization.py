"""JSON-ready dictionaries for every report type, and their inverses.

Exact rationals are written as ``"num/den"`` strings and permutations in
cycle notation. Every record that holds permutations also carries its
``degree`` so it can be parsed back. ``from_dict(type, to_dict(x)) == x``
holds for every supported type. Derived fields such as decimal renderings
are emitted for readers but ignored on parsing.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Callable

from .branch import GoodCosetFinding, GqpReport, HausdorffDimension, SurveyRow
from .constructions import Construction1Result, Construction2Result, GaloisResult
from .gf2 import GLCount
from .oracle import GqpOracleReport, McEstimate, OracleReport
from .permcore import PermSet, Permutation, coset, generate_group, generating_set, parse_permutation, perm_set
from .solver import FppResult, IterationTrace
from .spectrum import DerangementProfile


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def perm_text(p: Permutation) -> str:
    return p.cycle_notation()


def _opt(x, fn):
    return None if x is None else fn(x)


# permutation sets ----------------------------------------------------------

def permset_to_dict(S: PermSet) -> dict:
    out: dict[str, Any] = {"degree": S.degree, "kind": S.kind, "order": len(S)}
    if S.kind == "group":
        out["generators"] = [perm_text(g) for g in generating_set(S)]
    elif S.kind == "coset":
        out["representative"] = perm_text(S.representative)
        out["base"] = permset_to_dict(S.base)
    else:
        out["elements"] = [perm_text(g) for g in S.elements]
    return out


def permset_from_dict(data: dict) -> PermSet:
    d = data["degree"]
    if data["kind"] == "group":
        gens = [parse_permutation(g, d) for g in data["generators"]]
        return generate_group(gens or [Permutation.identity(d)])
    if data["kind"] == "coset":
        return coset(parse_permutation(data["representative"], d), permset_from_dict(data["base"]))
    return perm_set(parse_permutation(g, d) for g in data["elements"])


# solver --------------------------------------------------------------------

def fpp_to_dict(r: FppResult, degree: int | None = None) -> dict:
    frac = r.decimal.partition(".")[2]
    out: dict[str, Any] = {
        "classification": r.classification,
        "decimal": r.decimal,
        "decimal_digits": len(frac),
        "exact": _opt(r.exact, rational),
        "defining_polynomial": _opt(r.defining_polynomial, list),
        "interval": _opt(r.interval, lambda iv: [rational(iv[0]), rational(iv[1])]),
    }
    if r.per_coset is not None:
        out["degree"] = degree if degree is not None else r.per_coset[0][0].degree
        out["per_coset"] = [
            {"representative": perm_text(rep), "result": fpp_to_dict(sub)} for rep, sub in r.per_coset
        ]
    return out


def fpp_from_dict(data: dict) -> FppResult:
    per = None
    if data.get("per_coset") is not None:
        d = data["degree"]
        per = tuple(
            (parse_permutation(e["representative"], d), fpp_from_dict(e["result"])) for e in data["per_coset"]
        )
    return FppResult(
        classification=data["classification"],
        decimal=data["decimal"],
        defining_polynomial=_opt(data.get("defining_polynomial"), tuple),
        interval=_opt(data.get("interval"), lambda iv: (parse_rational(iv[0]), parse_rational(iv[1]))),
        exact=_opt(data.get("exact"), parse_rational),
        per_coset=per,
    )


def profile_to_dict(p: DerangementProfile) -> dict:
    return {"degree": p.degree, "counts": list(p.counts), "total": p.total}


def profile_from_dict(data: dict) -> DerangementProfile:
    return DerangementProfile(data["degree"], tuple(data["counts"]), data["total"])


def trace_to_dict(t: IterationTrace) -> dict:
    return {"p": [rational(x) for x in t.p], "sigma": list(t.sigma), "f": list(t.f)}


def trace_from_dict(data: dict) -> IterationTrace:
    return IterationTrace(tuple(map(parse_rational, data["p"])), tuple(data["sigma"]), tuple(data["f"]))


# branch --------------------------------------------------------------------

def hausdorff_to_dict(h: HausdorffDimension) -> dict:
    # the logs' arguments can exceed 2^53, so they travel as strings
    return {"log_numerator": str(h.log_numerator), "log_denominator": str(h.log_denominator),
            "decimal": h.decimal}


def hausdorff_from_dict(data: dict) -> HausdorffDimension:
    return HausdorffDimension.of(int(data["log_numerator"]), int(data["log_denominator"]))


def gqp_to_dict(r: GqpReport) -> dict:
    return {
        "degree": r.degree,
        "order_q": r.order_q,
        "order_p": r.order_p,
        "index": r.index,
        "level_transitive": r.level_transitive,
        "hausdorff": r.hausdorff.decimal,
        "finite_type_depth": r.finite_type_depth,
        "tfg": r.tfg,
        "just_infinite": r.just_infinite,
        "strongly_complete": r.strongly_complete,
        "fpp": fpp_to_dict(r.fpp, r.degree),
    }


def gqp_from_dict(data: dict) -> GqpReport:
    return GqpReport(
        degree=data["degree"],
        order_q=data["order_q"],
        order_p=data["order_p"],
        index=data["index"],
        level_transitive=data["level_transitive"],
        hausdorff=HausdorffDimension.of(data["order_q"], math.factorial(data["degree"])),
        finite_type_depth=data["finite_type_depth"],
        tfg=data["tfg"],
        just_infinite=data["just_infinite"],
        strongly_complete=data["strongly_complete"],
        fpp=fpp_from_dict(data["fpp"]),
    )


def finding_to_dict(f: GoodCosetFinding) -> dict:
    return {
        "degree": f.degree,
        "q": permset_to_dict(f.q),
        "p": permset_to_dict(f.p),
        "representative": perm_text(f.representative),
        "witness": list(f.witness),
    }


def finding_from_dict(data: dict) -> GoodCosetFinding:
    return GoodCosetFinding(
        data["degree"],
        permset_from_dict(data["q"]),
        permset_from_dict(data["p"]),
        parse_permutation(data["representative"], data["degree"]),
        tuple(data["witness"]),
    )


def survey_row_to_dict(r: SurveyRow) -> dict:
    d = r.fpp.per_coset[0][0].degree if r.fpp.per_coset else None
    return {
        "class_id": r.class_id,
        "generators": [perm_text(g) for g in r.generators],
        "order": r.order,
        "transitive": r.transitive,
        "orbit_count": r.orbit_count,
        "mean_fixed_points": rational(r.mean_fixed_points),
        "fpp": fpp_to_dict(r.fpp, d),
    }


def survey_row_from_dict(data: dict, degree: int) -> SurveyRow:
    return SurveyRow(
        data["class_id"],
        tuple(parse_permutation(g, degree) for g in data["generators"]),
        data["order"],
        data["transitive"],
        data["orbit_count"],
        parse_rational(data["mean_fixed_points"]),
        fpp_from_dict(data["fpp"]),
    )


# constructions -------------------------------------------------------------

def glcount_to_dict(c: GLCount) -> dict:
    return {"n": c.n, "good": c.good, "total": c.total, "ratio": rational(Fraction(c.good, c.total))}


def glcount_from_dict(data: dict) -> GLCount:
    return GLCount(data["n"], data["good"], data["total"])


def construction1_to_dict(c: Construction1Result) -> dict:
    return {
        "d": c.d,
        "unit_group": list(c.unit_group),
        "proper_subgroup": c.proper_subgroup,
        "closed_form": rational(c.closed_form),
        "report": gqp_to_dict(c.report),
    }


def construction1_from_dict(data: dict) -> Construction1Result:
    return Construction1Result(data["d"], tuple(data["unit_group"]), data["proper_subgroup"],
                               parse_rational(data["closed_form"]), gqp_from_dict(data["report"]))


def construction2_to_dict(c: Construction2Result) -> dict:
    return {
        "n": c.n,
        "r": c.r,
        "d": c.d,
        "gl_good": c.gl_good,
        "gl_total": c.gl_total,
        "fpp": rational(c.fpp),
        "report": _opt(c.report, gqp_to_dict),
    }


def construction2_from_dict(data: dict) -> Construction2Result:
    return Construction2Result(data["n"], data["r"], data["d"], data["gl_good"], data["gl_total"],
                               parse_rational(data["fpp"]), _opt(data.get("report"), gqp_from_dict))


def galois_to_dict(g: GaloisResult) -> dict:
    return {"d": g.d, "fpp": rational(g.fpp), "hausdorff": g.hausdorff.decimal,
            "checked_against_affine": g.checked_against_affine}


def galois_from_dict(data: dict) -> GaloisResult:
    d = data["d"]
    return GaloisResult(d, parse_rational(data["fpp"]), HausdorffDimension.of(d, math.factorial(d)),
                        data["checked_against_affine"])


# oracle --------------------------------------------------------------------

def oracle_to_dict(r: OracleReport) -> dict:
    return {
        "degree": r.degree,
        "level": r.level,
        "sigma": r.sigma_n,
        "f_brute": r.f_n_brute,
        "f_recursion": r.f_n_recursion,
        "p": rational(r.p_n),
        "agrees": r.agrees,
    }


def oracle_from_dict(data: dict) -> OracleReport:
    return OracleReport(data["degree"], data["level"], data["sigma"], data["f_brute"],
                        data["f_recursion"], parse_rational(data["p"]), data["agrees"])


def gqp_oracle_to_dict(r: GqpOracleReport) -> dict:
    return {
        "degree": r.per_coset[0][1].degree,
        "level": r.level,
        "sigma": r.sigma_n,
        "f_brute": r.f_n,
        "p": rational(r.p_n),
        "agrees": r.agrees,
        "per_coset": [{"representative": perm_text(rep), "report": oracle_to_dict(sub)}
                      for rep, sub in r.per_coset],
    }


def gqp_oracle_from_dict(data: dict) -> GqpOracleReport:
    d = data["degree"]
    parts = tuple((parse_permutation(e["representative"], d), oracle_from_dict(e["report"]))
                  for e in data["per_coset"])
    return GqpOracleReport(data["level"], parts, data["sigma"], data["f_brute"],
                           parse_rational(data["p"]), data["agrees"])


def mc_to_dict(m: McEstimate) -> dict:
    return {
        "samples": m.samples,
        "survivors": m.survivors,
        "depth": m.depth,
        "seed": m.seed,
        "estimate": rational(m.estimate),
        "estimate_decimal": f"{float(m.estimate):.6f}",
        "stderr": f"{m.stderr:.6e}",
    }


def mc_from_dict(data: dict) -> McEstimate:
    return McEstimate(data["samples"], data["survivors"], data["depth"], data["seed"])


# dispatch ------------------------------------------------------------------

_WRITERS: dict[type, Callable[[Any], dict]] = {
    PermSet: permset_to_dict,
    FppResult: fpp_to_dict,
    DerangementProfile: profile_to_dict,
    IterationTrace: trace_to_dict,
    HausdorffDimension: hausdorff_to_dict,
    GqpReport: gqp_to_dict,
    GoodCosetFinding: finding_to_dict,
    SurveyRow: survey_row_to_dict,
    GLCount: glcount_to_dict,
    Construction1Result: construction1_to_dict,
    Construction2Result: construction2_to_dict,
    GaloisResult: galois_to_dict,
    OracleReport: oracle_to_dict,
    GqpOracleReport: gqp_oracle_to_dict,
    McEstimate: mc_to_dict,
}

_READERS: dict[type, Callable[[dict], Any]] = {
    PermSet: permset_from_dict,
    FppResult: fpp_from_dict,
    DerangementProfile: profile_from_dict,
    IterationTrace: trace_from_dict,
    HausdorffDimension: hausdorff_from_dict,
    GqpReport: gqp_from_dict,
    GoodCosetFinding: finding_from_dict,
    GLCount: glcount_from_dict,
    Construction1Result: construction1_from_dict,
    Construction2Result: construction2_from_dict,
    GaloisResult: galois_from_dict,
    OracleReport: oracle_from_dict,
    GqpOracleReport: gqp_oracle_from_dict,
    McEstimate: mc_from_dict,
}


def to_dict(obj) -> dict:
    try:
        return _WRITERS[type(obj)](obj)
    except KeyError:
        raise TypeError(f"no serializer for {type(obj).__name__}") from None


def from_dict(kind: type, data: dict):
    """Inverse of :func:`to_dict`. Survey rows need their degree; use ``survey_row_from_dict``."""
    try:
        reader = _READERS[kind]
    except KeyError:
        raise TypeError(f"no parser for {kind.__name__}") from None
    return reader(data)
