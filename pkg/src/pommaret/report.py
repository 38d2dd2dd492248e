"""Plain-data (JSON-ready) renderings of results.

Exact coefficients appear as strings such as ``"-3/2"``; maxima over empty
sets are written ``"-inf"``.
"""

from __future__ import annotations

import hashlib
import json

from . import terms as T
from .complin import ComponentwiseVerdict, GinSample
from .invariants import HilbertSeries, InvariantReport, SaturationResult
from .involutive import DeltaSingular, PommaretBasis
from .monomial import LinearQuotientsReport, MonomialIdeal, MonomialPommaretBasis, PGraph
from .ring import LinearChange, Ring

NEG_INF = "-inf"
CONVENTION = (
    "reverse lexicographic order with x1 < x2 < ... < xn; the class of a term is "
    "the index of its first variable and x1..x_class are its multiplicative variables"
)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False)


def maybe(v):
    return NEG_INF if v is None else v


def monomial(mu, names) -> str:
    return T.format_monomial(mu, names)


def ring_data(R: Ring) -> dict:
    return {"variables": list(R.names), "characteristic": R.characteristic}


def change_data(change: LinearChange, strategy: str = "identity") -> dict:
    names = change.ring.names
    images = []
    for name, row in zip(names, change.matrix):
        terms = [
            (c, v) for c, v in zip(row, names) if c
        ]
        images.append(f"{name} -> " + " + ".join(
            v if c == 1 else f"{change.ring.format_coefficient(c)}*{v}" for c, v in terms
        ))
    return {
        "identity": change.is_identity,
        "strategy": strategy,
        "matrix": change.to_strings(),
        "substitution": images,
    }


def basis_data(H: PommaretBasis) -> list[dict]:
    names = H.ring.names
    out = []
    for h, mu in zip(H.elements, H.lead_exponents):
        out.append({
            "polynomial": h.to_string(H.order),
            "leading_term": monomial(mu, names),
            "degree": h.degree(),
            "class": T.cls(mu),
            "multiplicative": [names[i - 1] for i in sorted(T.multiplicative_variables(mu))],
        })
    return out


def monomial_basis_data(H: MonomialPommaretBasis, names) -> list[dict]:
    return [
        {
            "term": monomial(mu, names),
            "degree": T.degree(mu),
            "class": T.cls(mu),
            "multiplicative": [names[i - 1] for i in sorted(T.multiplicative_variables(mu))],
        }
        for mu in H.elements
    ]


def ideal_data(I: MonomialIdeal, names) -> list[str]:
    return [monomial(g, names) for g in I.gens]


def invariants_data(r: InvariantReport, names) -> dict:
    return {
        "reg": r.reg,
        "pd": r.pd,
        "depth_quotient": r.depth_quotient,
        "dim": r.dim,
        "cohen_macaulay": r.cohen_macaulay,
        "satiety": "saturated" if r.satiety is None else r.satiety,
        "noether_vars": [names[i - 1] for i in r.noether_vars],
        "q_vector": [maybe(q) for q in r.q_vector],
        "reg_t": [maybe(v) for v in r.reg_t],
        "a_star_t": [maybe(v) for v in r.a_star_t],
        "resolution_ranks": {
            "total": list(r.resolution_ranks.total),
            "bigraded": [[i, j, v] for (i, j), v in r.resolution_ranks.bigraded.items()],
        },
        "extremal_betti": [{"position": [i, j], "value": v} for (i, j), v in r.extremal_betti],
        "census": [[k, q, c] for (k, q), c in r.census.counts.items()],
    }


def singular_data(s: DeltaSingular, names) -> dict:
    return {
        "leading_ideal": ideal_data(s.leading_ideal, names),
        "quasi_stable": s.breakdown,
        "runaway_prolongation": None if s.prolongation is None else monomial(s.prolongation, names),
    }


def hilbert_data(hs: HilbertSeries, max_degree: int) -> dict:
    return {
        "denominator": f"(1-t)^{hs.n}",
        "numerator": list(hs.numerator),
        "quotient_numerator": list(hs.quotient_numerator()),
        "ideal_coefficients": hs.coefficients(max_degree),
        "quotient_coefficients": hs.quotient_coefficients(max_degree),
    }


def saturation_data(s: SaturationResult, names, order) -> dict:
    def fmt(x):
        return x.to_string(order) if hasattr(x, "to_string") else monomial(x, names)

    return {
        "saturated": s.saturated,
        "unit_ideal": s.unit,
        "weak_basis": [fmt(x) for x in s.weak_basis],
        "basis": ["1"] if s.unit else [fmt(x) for x in s.basis],
    }


def quotients_data(ordered, report: LinearQuotientsReport, graph: PGraph, names) -> dict:
    return {
        "inverse_p_ordering": [monomial(m, names) for m in ordered],
        "colons": [
            {
                "index": row.index,
                "element": monomial(row.element, names),
                "colon": ideal_data(row.colon, names),
                "nonmultiplicative": [names[i - 1] for i in sorted(row.nonmultiplicative)],
                "equals_nonmultiplicative": row.matches_nonmultiplicative,
            }
            for row in report.rows
        ],
        "linear_quotients": report.has_linear_quotients,
        "colon_identity": report.colon_identity_holds,
        "p_graph": [
            {"from": monomial(a, names), "to": monomial(b, names), "variable": names[j - 1]}
            for a, b, j in graph.edges
        ],
    }


def complin_data(v: ComponentwiseVerdict, names) -> dict:
    return {
        "componentwise_linear": v.verdict,
        "decided_by": "lt I stable and beta_0(I) = beta_0(lt I)",
        "lt_stable": v.lt_stable,
        "beta0_ideal": v.beta0_ideal,
        "beta0_leading_ideal": v.beta0_leading,
        "component_regularity": [[d, r] for d, r in v.component_regularity.items()],
    }


def gin_data(g: GinSample, names) -> dict:
    return {
        "experimental": True,
        "note": "most frequent leading ideal over random coordinates; not certified to be gin I",
        "candidate": None if g.candidate is None else ideal_data(g.candidate, names),
        "tied_candidates": [ideal_data(I, names) for I in g.tied],
        "votes": [{"ideal": ideal_data(I, names), "count": c} for I, c in sorted(g.votes.items(), key=lambda kv: (-kv[1], kv[0].gens))],
        "unanimous": g.unanimous,
        "resampled_draws": g.retries,
        "checks": {
            "quasi_stable": g.quasi_stable,
            "stable": g.stable,
            "transferable_invariants_match": g.invariants_match,
        },
    }
