"""Predicting 2-extendability of vertex-transitive graphs and checking predictions against the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import families
from .connectivity import DEFAULT_ENUMERATION_CAP, ConnectivityReport, connectivity_report
from .graph import Graph, GraphError, girth, is_bipartite, is_connected
from .matching import is_k_extendable
from .symmetry import is_isomorphic, is_vertex_transitive

TWO_EXTENDABLE = "TwoExtendable"
NOT_TWO_EXTENDABLE = "NotTwoExtendable"
UNKNOWN = "Unknown"


def _family_members(order: int) -> list[tuple[str, int, Graph]]:
    """Members of the exceptional circulant families (and Petersen) with the given order."""
    out = []
    for fam in families.EXCEPTIONAL:
        if fam in ("(i)", "(ii)"):
            n, ok = order // 2, order % 2 == 0
        elif fam == "(iii)":
            n, ok = order // 4, order % 4 == 0
        else:
            n, ok = (order - 2) // 4, order % 4 == 2
        if ok:
            try:
                out.append((fam, n, families.exceptional_circulant(fam, n)))
            except families.FamilyError:
                pass
    if order == 10:
        out.append(("petersen", 0, families.named("petersen")))
    return out


@dataclass(frozen=True)
class FamilyMatch:
    family: str
    n: int

    @property
    def label(self) -> str:
        return "petersen" if self.family == "petersen" else f"{self.family} n={self.n}"


def matches_exceptional_family(g: Graph) -> FamilyMatch | None:
    """The first of families (i)-(v), then Petersen, that has a member isomorphic to ``g``."""
    deg = g.regular_degree()
    for fam, n, member in _family_members(g.n):
        if member.regular_degree() != deg or member.m != g.m:
            continue
        if is_isomorphic(g, member):
            return FamilyMatch(fam, n)
    return None


@dataclass(frozen=True)
class Verdict:
    """A 2-extendability prediction.

    ``prediction`` is one of ``TwoExtendable``, ``NotTwoExtendable`` or ``Unknown``;
    ``reason`` is set for the latter two.
    """

    prediction: str
    reason: str | None = None
    applicable_theorem: str | None = None
    exceptional_family: str | None = None

    def to_json(self) -> dict:
        return {"prediction": self.prediction, "reason": self.reason,
                "applicable_theorem": self.applicable_theorem,
                "exceptional_family": self.exceptional_family}


def predict(g: Graph, vertex_transitive: bool | None = None) -> Verdict:
    """Predict whether a connected even-order vertex-transitive graph is 2-extendable.

    Vertex-transitivity is computed unless supplied. Degree-4 non-bipartite
    graphs outside families (ii) and (v) are left ``Unknown``.
    """
    if g.n % 2:
        raise GraphError("prediction needs even order")
    if not is_connected(g):
        raise GraphError("prediction needs a connected graph")
    if vertex_transitive is None:
        vertex_transitive = is_vertex_transitive(g)[0]
    if not vertex_transitive:
        return Verdict(UNKNOWN, "not-vertex-transitive")
    if g.n < 6:
        return Verdict(UNKNOWN, "order-below-6")
    match = matches_exceptional_family(g)
    fam = match.label if match else None
    k = g.regular_degree()
    if is_bipartite(g):
        if k == 2:
            return Verdict(NOT_TWO_EXTENDABLE, "cycle", "bipartite", fam)
        return Verdict(TWO_EXTENDABLE, None, "bipartite", fam)
    if k == 3:
        if girth(g) == 3:
            return Verdict(NOT_TWO_EXTENDABLE, "girth-3", "maintheorem", fam)
        if match and match.family == "petersen":
            return Verdict(NOT_TWO_EXTENDABLE, "petersen", "maintheorem", fam)
        if match and match.family in ("(iii)", "(iv)") and match.n >= 2:
            return Verdict(NOT_TWO_EXTENDABLE, f"exceptional-family-{match.family}", "maintheorem", fam)
        return Verdict(TWO_EXTENDABLE, None, "maintheorem", fam)
    if k >= 5:
        return Verdict(TWO_EXTENDABLE, None, "sun", fam)
    if k == 4:
        if match and match.family in ("(ii)", "(v)"):
            return Verdict(NOT_TWO_EXTENDABLE, f"exceptional-family-{match.family}", "original", fam)
        return Verdict(UNKNOWN, "degree-4-open", None, fam)
    # a connected even-order 2-regular graph is an even cycle, hence bipartite
    return Verdict(UNKNOWN, f"degree-{k}", None, fam)


@dataclass(frozen=True)
class Certificate:
    fingerprint: dict
    invariants: ConnectivityReport | None
    oracle_result: bool | None
    oracle_witness: tuple | None
    verdict: Verdict
    agreement: bool | None
    vertex_transitive: bool
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "fingerprint": self.fingerprint,
            "params": self.params,
            "vertex_transitive": self.vertex_transitive,
            "invariants": self.invariants.to_json() if self.invariants else None,
            "oracle": {"two_extendable": self.oracle_result,
                       "witness": [list(e) for e in self.oracle_witness] if self.oracle_witness else None},
            "verdict": self.verdict.to_json(),
            "agreement": self.agreement,
        }


def fingerprint(g: Graph) -> dict:
    gi = girth(g)
    return {"order": g.n, "size": g.m, "girth": None if gi == float("inf") else int(gi),
            "degree": g.regular_degree()}


def cross_validate(g: Graph, params: dict | None = None, connectivity: bool = True,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> Certificate:
    """Run the prediction and the brute-force 2-extendability oracle and compare them.

    ``Unknown`` predictions leave ``agreement`` as ``None``.
    """
    vt = is_vertex_transitive(g)[0]
    verdict = predict(g, vt)
    oracle = witness = None
    if g.n >= 6:
        res = is_k_extendable(g, 2)
        oracle, witness = res.value, res.witness
    agreement = None
    if verdict.prediction != UNKNOWN and oracle is not None:
        agreement = oracle == (verdict.prediction == TWO_EXTENDABLE)
    report = connectivity_report(g, cap, transitive=vt) if connectivity and g.n >= 2 else None
    return Certificate(fingerprint(g), report, oracle, witness, verdict, agreement, vt, dict(params or {}))
