"""Mechanical re-checking of every finite claim about the irreducible Levi graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from levi import families as fam
from levi.canon import are_isomorphic, canonical_form
from levi.cuts import essential_4ec
from levi.errors import LeviError, TemplateInvalid
from levi.graph import Graph
from levi.martinetti import (
    extend,
    extension_representatives,
    extension_sites,
    extensions_up_to_iso,
    is_irreducible,
    iter_reductions,
    reduce,
    reduction_sites,
)
from levi.two_factors import ClassificationReport, EnumBudget, classify, find_parity_witnesses
from levi.witnesses import WitnessPair, d_witness_pair, t_witness_pair, validate_t_segment

PASS = "pass"
FAIL = "fail"
TEMPLATE_INVALID = "template_invalid"

GROUPS = ("classify", "d", "t", "martinetti", "star")


@dataclass
class Claim:
    id: str
    group: str
    statement: str
    status: str = FAIL
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "group": self.group, "statement": self.statement,
                "status": self.status, "evidence": self.evidence}


def flags_consistent(r: ClassificationReport) -> bool:
    """2FH implies 2FI implies pseudo-2FI, and a non-pseudo verdict has a witness
    pair of differing parity."""
    chain = [r.two_factor_hamiltonian, r.two_factor_isomorphic, r.pseudo_two_factor_isomorphic]
    for a, b in zip(chain, chain[1:]):
        if a is True and b is not True:
            return False
    if r.pseudo_two_factor_isomorphic is False:
        pair = r.witness_pair
        if pair is None or pair[0].circuit_count % 2 == pair[1].circuit_count % 2:
            return False
    return True


def _check(claim: Claim, fn: Callable[[], tuple[bool, dict]]) -> Claim:
    try:
        ok, evidence = fn()
        claim.status = PASS if ok else FAIL
        claim.evidence = evidence
    except TemplateInvalid as exc:
        claim.status = TEMPLATE_INVALID
        claim.evidence = {"error": str(exc)}
    except LeviError as exc:
        claim.status = FAIL
        claim.evidence = {"error": f"{type(exc).__name__}: {exc}"}
    return claim


def _census(r: ClassificationReport) -> dict:
    return {"total": r.total_two_factors,
            "by_circuit_count": {str(k): v for k, v in r.by_circuit_count.items()},
            "flags": r.flags(), "status": r.status}


# -- classify group ----------------------------------------------------------------

def _classify_claims() -> Iterator[tuple[Claim, Callable]]:
    def k33():
        r = classify(fam.k33())
        ok = (r.total_two_factors == 6 and set(r.by_lengths) == {(6,)}
              and r.two_factor_hamiltonian and r.two_factor_isomorphic
              and r.pseudo_two_factor_isomorphic and flags_consistent(r))
        return ok, _census(r)

    def heawood():
        r = classify(fam.heawood())
        ok = (r.total_two_factors == 24 and set(r.by_lengths) == {(14,)}
              and r.two_factor_hamiltonian is True and flags_consistent(r))
        return ok, _census(r)

    def pappus():
        r = classify(fam.pappus())
        ok = (r.pseudo_two_factor_isomorphic is True and r.two_factor_isomorphic is False
              and set(r.by_circuit_count) <= {1, 3} and flags_consistent(r))
        return ok, _census(r)

    def e4ec():
        verdicts = {name: essential_4ec(g).yes for name, g in
                    (("k33", fam.k33()), ("heawood", fam.heawood()), ("pappus", fam.pappus()))}
        return all(verdicts.values()), verdicts

    yield Claim("classify.k33", "classify", "K33: six 2-factors, all hexagons; 2-factor hamiltonian"), k33
    yield Claim("classify.heawood", "classify", "Heawood graph is 2-factor hamiltonian (24 2-factors)"), heawood
    yield Claim("classify.pappus", "classify",
                "Pappus graph is pseudo 2-factor isomorphic but not 2-factor isomorphic"), pappus
    yield Claim("classify.essential_4ec", "classify",
                "K33, Heawood and Pappus graphs are essentially 4-edge-connected"), e4ec


# -- D(n) group -----------------------------------------------------------------------

def _witness_evidence(p: WitnessPair) -> dict:
    return {"hamiltonian": list(p.hamiltonian.lengths), "disconnected": list(p.disconnected.lengths)}


def _fallback(g: Graph) -> dict:
    pair = find_parity_witnesses(g)
    if pair is None:
        return {"fallback": "no witnesses found by enumeration"}
    return {"fallback": [list(tf.lengths) for tf in pair]}


def _d_claims(nmax: int) -> Iterator[tuple[Claim, Callable]]:
    for n in range(7, nmax + 1):
        def iso(n=n):
            return are_isomorphic(fam.d_graph(n), fam.cyclic_levi(n, 1, 3)), {"n": n}
        yield Claim(f"d.{n}.cyclic", "d", f"D({n}) is the Levi graph of the cyclic {n}_3 configuration with base line {{0,1,3}}"), iso

    for n in range(8, nmax + 1):
        def template(n=n):
            p = d_witness_pair(n)
            g = fam.d_graph(n)
            ok = all(len(tf.edges) == g.edge_count - n for tf in (p.hamiltonian, p.disconnected))
            return ok, _witness_evidence(p)

        def parity(n=n):
            g = fam.d_graph(n)
            r = classify(g, EnumBudget.parity())
            ok = r.pseudo_two_factor_isomorphic is False and flags_consistent(r)
            evidence = {"witness_circuit_counts": [tf.circuit_count for tf in r.witness_pair]} if r.witness_pair else {}
            return ok, evidence

        yield Claim(f"d.{n}.witness_template", "d", f"the explicit hamiltonian and two-circuit 2-factors of D({n}) are valid"), template
        yield Claim(f"d.{n}.not_pseudo", "d", f"D({n}) is not pseudo 2-factor isomorphic"), parity

    for n in range(7, nmax + 1):
        def irreducible(n=n):
            return is_irreducible(fam.d_graph(n)), {"n": n}
        yield Claim(f"d.{n}.irreducible", "d", f"D({n}) is Martinetti irreducible"), irreducible

    def heawood():
        r = classify(fam.d_graph(7))
        return (r.pseudo_two_factor_isomorphic is True and are_isomorphic(fam.d_graph(7), fam.heawood())), _census(r)
    yield Claim("d.7.heawood", "d", "D(7) is the Heawood graph and is pseudo 2-factor isomorphic"), heawood


# -- T group -------------------------------------------------------------------------

def _t_claims() -> Iterator[tuple[Claim, Callable]]:
    def segment():
        validate_t_segment(fam.t_segment())
        return True, {"vertices": 20, "edges": fam.t_segment().edge_count}
    yield Claim("t.segment", "t", "the segment paths are walks of the segment graph and P3 avoids P2"), segment

    for n in (1, 2):
        for variant in (1, 2, 3):
            def template(n=n, variant=variant):
                p = t_witness_pair(n, variant)
                ok = (p.hamiltonian.lengths == (20 * n,)
                      and p.disconnected.lengths == tuple(sorted((20 * n - 10, 10))))
                return ok, _witness_evidence(p)

            def parity(n=n, variant=variant):
                r = classify(fam.t_graph(n, variant), EnumBudget.parity())
                return r.pseudo_two_factor_isomorphic is False and flags_consistent(r), {"status": r.status}

            yield Claim(f"t.{variant}.{n}.witness_template", "t", f"explicit parity witnesses in T{variant}({n})"), template
            yield Claim(f"t.{variant}.{n}.not_pseudo", "t", f"T{variant}({n}) is not pseudo 2-factor isomorphic"), parity

        def distinct(n=n):
            certs = [canonical_form(fam.t_graph(n, v)) for v in (1, 2, 3)]
            return len(set(certs)) == 3, {"n": n}
        yield Claim(f"t.{n}.pairwise_non_isomorphic", "t", f"T1({n}), T2({n}), T3({n}) are pairwise non-isomorphic"), distinct

    def irreducible():
        verdicts = {f"T{v}(1)": is_irreducible(fam.t_graph(1, v)) for v in (1, 2, 3)}
        return all(verdicts.values()), verdicts
    yield Claim("t.irreducible", "t", "T1(1), T2(1), T3(1) are Martinetti irreducible"), irreducible

    def desargues():
        return are_isomorphic(fam.t_graph(1, 1), fam.levi(fam.desargues_configuration())), {}
    yield Claim("t.desargues", "t", "T1(1) is the Levi graph of the Desargues configuration"), desargues


# -- Martinetti group -----------------------------------------------------------------

def _martinetti_claims(samples: int = 50, seed: int = 0) -> Iterator[tuple[Claim, Callable]]:
    def heawood():
        sites = extension_sites(fam.heawood())
        return not sites, {"sites": len(sites)}

    def pappus_unique():
        classes = extensions_up_to_iso(fam.pappus())
        return len(classes) == 1, {"classes": len(classes), "sites": sum(m for _, m in classes)}

    def pappus_ext_not_pseudo():
        reps = extension_representatives(fam.pappus())
        reports = [classify(h) for _, h, _ in reps]
        ok = bool(reports) and all(r.pseudo_two_factor_isomorphic is False and flags_consistent(r) for r in reports)
        return ok, {"classes": len(reps), "by_circuit_count": [_census(r)["by_circuit_count"] for r in reports]}

    def pappus_irreducible():
        ext = extension_representatives(fam.pappus())[0][1]
        return is_irreducible(fam.pappus()) and not is_irreducible(ext), {}

    def round_trip():
        checked, failures = round_trip_sample(samples, seed)
        return not failures and checked == samples, {"sampled": checked, "failures": failures}

    yield Claim("martinetti.heawood_not_extendible", "martinetti", "the 7_3 configuration is not Martinetti extendible"), heawood
    yield Claim("martinetti.pappus_unique", "martinetti", "the Pappus configuration is Martinetti extendible in a unique way"), pappus_unique
    yield Claim("martinetti.pappus_extension_not_pseudo", "martinetti", "the extension of the Pappus configuration is not pseudo 2-factor isomorphic"), pappus_ext_not_pseudo
    yield Claim("martinetti.pappus_irreducible", "martinetti", "the Pappus graph is irreducible and its extension is not"), pappus_irreducible
    yield Claim("martinetti.round_trip", "martinetti", f"extend then reduce recovers the graph on {samples} sampled sites"), round_trip


def corpus() -> list[tuple[str, Graph]]:
    """Levi graphs used for sampling Martinetti moves."""
    out = [("pappus", fam.pappus())]
    out += [(f"D({n})", fam.d_graph(n)) for n in range(8, 13)]
    out += [(f"T{v}(1)", fam.t_graph(1, v)) for v in (1, 2, 3)]
    out.append(("H0*H0", fam.heawood_star_heawood()[0]))
    return out


def round_trip_sample(samples: int = 50, seed: int = 0) -> tuple[int, list[str]]:
    """Extend at randomly chosen sites, then look for a reduction back."""
    rng = random.Random(seed)
    pool = []
    for name, g in corpus():
        for s in extension_sites(g):
            pool.append((name, g, s))
    picks = rng.sample(pool, min(samples, len(pool)))
    failures = []
    for name, g, s in picks:
        h = extend(g, s)
        target = canonical_form(g)
        if not any(canonical_form(r) == target for _, r in iter_reductions(h)):
            failures.append(f"{name}: {s}")
    return len(picks), failures


# -- star product group -----------------------------------------------------------------

def _star_claims() -> Iterator[tuple[Claim, Callable]]:
    for pairing in fam.PAIRINGS:
        tag = "".join(map(str, pairing))

        def check(pairing=pairing):
            g, cut = fam.heawood_star_heawood(pairing)
            r = classify(g)
            e4 = essential_4ec(g)
            sites = reduction_sites(g, certificates=False)
            in_cut = all(g.edge_id(*s.edge) in cut for s in sites)
            reduced = [classify(reduce(g, s)) for s in sites]
            ok = (
                g.vertex_count == 26
                and r.two_factor_hamiltonian is True
                and not e4.yes and e4.witness is not None and e4.witness.edges == cut
                and bool(sites) and in_cut
                and all(x.pseudo_two_factor_isomorphic is False and flags_consistent(x) for x in reduced)
                and flags_consistent(r)
            )
            return ok, {
                "vertices": g.vertex_count,
                "two_factors": r.total_two_factors,
                "cut": sorted(cut),
                "reduction_sites": [[g.edge_id(*s.edge), s.option] for s in sites],
            }

        yield Claim(f"star.{tag}", "star",
                    f"H0*H0 (pairing {tag}) is 2-factor hamiltonian, has a non-trivial 3-edge-cut, "
                    "reduces only through it, and every reduction is not pseudo 2-factor isomorphic"), check


def iter_claims(groups=GROUPS, nmax: int = 15) -> Iterator[tuple[Claim, Callable]]:
    makers = {
        "classify": _classify_claims,
        "d": lambda: _d_claims(nmax),
        "t": _t_claims,
        "martinetti": _martinetti_claims,
        "star": _star_claims,
    }
    for group in GROUPS:
        if group in groups:
            yield from makers[group]()


def verify_claim_suite(groups=GROUPS, nmax: int = 15) -> list[Claim]:
    """Run every selected claim; failures become ledger entries.

    A failed witness template is reported as ``template_invalid`` and the
    underlying non-pseudo-2FI statement is still checked independently by
    enumeration in its own ``not_pseudo`` claim.
    """
    ledger = []
    for claim, fn in iter_claims(groups, nmax):
        ledger.append(_check(claim, fn))
        if claim.status == TEMPLATE_INVALID and claim.id.endswith("witness_template"):
            try:
                claim.evidence.update(_fallback_for(claim.id))
            except LeviError as exc:
                claim.evidence["fallback"] = f"{type(exc).__name__}: {exc}"
    return ledger


def _fallback_for(claim_id: str) -> dict:
    parts = claim_id.split(".")
    if parts[0] == "d":
        return _fallback(fam.d_graph(int(parts[1])))
    variant, n = int(parts[1]), int(parts[2])
    return _fallback(fam.t_graph(n, variant))


def all_passed(ledger: list[Claim]) -> bool:
    return all(c.status == PASS for c in ledger)
