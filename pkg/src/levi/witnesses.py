"""Explicit 2-factors of opposite parity in the D and T families.

Path templates are kept as label strings and instantiated against the
labelled family graphs.  A 2-factor formula is a list of circuit
expressions; each expression is a space separated sequence of

* a vertex label such as ``u_1^4`` or ``w_m^2``,
* a template name such as ``M1`` (index-free) or ``L1[i]``,
* a chain ``L2[4..m-1]`` expanding to ``L2[4] L2[5] ... L2[m-1]``,

concatenated with the connecting edges; the expression must close up into
a circuit (its last vertex equal to its first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from levi.errors import MissingJunctionEdge, OutOfRange, TemplateInvalid, VertexReuse
from levi.families import d_graph, t_graph
from levi.graph import Graph, Path, decompose
from levi.two_factors import TwoFactor

# -- templates for D(n) ----------------------------------------------------------

D_TEMPLATES = {
    "L1": "u_i^1 u_i^2 u_i^3 u_i^4 v_i^2 v_i^1",
    "L2": "u_i^4 u_i^3 u_i^2 u_i^1 v_i^1 v_i^2",
    "M1": "u_1^4 v_1^2 u_2^4 u_2^3 u_3^2 u_3^3 u_3^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2",
    "M2": "u_m^4 v_m^2 v_m^1 u_m^1 u_m^2 u_m^3 w_m^1 w_m^2 u_1^4",
    "N": "u_i^2 u_i^1 v_i-1^1 v_i-1^2 u_i^4 u_i^3",
    "Nm": "w_m^2 w_m^1 v_m^1 v_m^2 w_m^4 w_m^3 u_1^4 v_1^2 u_2^4 u_2^3",
    "C1": "u_1^1 u_1^2 u_1^3 u_2^2 u_2^1 v_1^1 u_1^1",
    "C2": "u_1^1 u_1^2 u_1^3 u_1^4 w_m^2 w_m^1 u_1^1",
    "C3": "v_1^1 v_1^2 u_2^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2 u_3^4 u_3^3 u_3^2 u_2^3 u_2^2 u_2^1 v_1^1",
}

D_HAMILTONIAN = {
    0: ["L1[1..m] u_1^1"],
    1: ["L1[1..m] w_m^2 w_m^1 u_1^1"],
    2: ["L1[1..m] w_m^1 w_m^2 w_m^3 w_m^4 u_1^1"],
}


def d_disconnected_formula(n: int) -> list[str]:
    """Circuit expressions of the two-circuit 2-factor of D(n), n >= 8.

    In the last case the chain runs over the generic ``N[i]`` for
    ``i = 3..m`` and is completed by the closing path ``Nm``.
    """
    m, r = divmod(n, 3)
    if r == 0:
        return ["C1", "M1 u_1^4"] if n == 9 else ["C1", "M1 L2[4..m] u_1^4"]
    if r == 1:
        if n == 10:
            return ["C2", "C3"]
        if n == 13:
            return ["C1", "M1 M2"]
        return ["C1", "M1 L2[4..m-1] M2"]
    if n == 8:
        return ["C1", "Nm w_m^2"]
    return ["C1", "N[3..m] Nm u_3^2"]


# -- templates for T_1, T_2, T_3 -----------------------------------------------------

T_TEMPLATES = {
    "P1": "u_i^2 w_i^1 u_i^1 w_i^2 u_i^3 w_i^3 x_i^3 y_i^3 z_i^3 v_i^3 "
          "t_i^2 v_i^1 z_i^1 y_i^2 x_i^2 t_i^1 x_i^1 y_i^1 z_i^2 v_i^2",
    "P2": "u_i^2 w_i^1 u_i^1 w_i^2 u_i^3 w_i^3 x_i^3 y_i^3 z_i^2 v_i^2",
    "P3": "v_i^1 t_i^2 v_i^3 z_i^3 y_i^2 x_i^2 t_i^1 x_i^1 y_i^1 z_i^1 v_i^1",
    "Q1": "u_i^3 w_i^3 u_i^2 w_i^1 u_i^1 w_i^2 x_i^2 y_i^2 z_i^3 v_i^3 "
          "t_i^2 v_i^1 z_i^1 y_i^1 x_i^1 t_i^1 x_i^3 y_i^3 z_i^2 v_i^2",
    "Q2": "u_i^3 w_i^2 u_i^1 w_i^1 u_i^2 w_i^3 x_i^3 y_i^3 z_i^2 v_i^2",
}


def t_formulas(variant: int) -> tuple[list[str], list[str]]:
    """(hamiltonian, two-circuit) expressions for T_variant(n)."""
    if variant in (1, 2):
        return ["P1[1..n] u_1^2"], ["P2[1] P1[2..n] u_1^2", "P3[1]"]
    if variant == 3:
        return ["Q1[1] P1[2..n] u_1^3"], ["Q2[1] P1[2..n] u_1^3", "P3[1]"]
    raise OutOfRange("variant must be 1, 2 or 3")


# -- instantiation ----------------------------------------------------------------

_INDEX = re.compile(r"^(i|m|n|\d+)(?:-(\d+))?$")
_LABEL = re.compile(r"^([a-z])_([^^]+)\^(\d)$")
_TEMPLATE_REF = re.compile(r"^([A-Z][A-Za-z0-9]*)(?:\[([^\]]+)\])?$")


def _eval_index(expr: str, env: dict[str, int]) -> int:
    match = _INDEX.match(expr)
    if not match:
        raise TemplateInvalid(f"bad index expression {expr!r}")
    base = env[match[1]] if match[1] in env else int(match[1])
    return base - int(match[2] or 0)


def _resolve(label: str, env: dict[str, int]) -> str:
    match = _LABEL.match(label)
    if not match:
        raise TemplateInvalid(f"bad vertex token {label!r}")
    return f"{match[1]}_{_eval_index(match[2], env)}^{match[3]}"


@dataclass(frozen=True)
class PathTemplate:
    name: str
    text: str

    @property
    def is_circuit(self) -> bool:
        tokens = self.text.split()
        return tokens[0] == tokens[-1]

    def instantiate(self, g: Graph, env: dict[str, int]) -> Path:
        names = [_resolve(tok, env) for tok in self.text.split()]
        try:
            vertices = tuple(g.vertex(x) for x in names)
        except KeyError as exc:
            raise TemplateInvalid(f"{self.name}: {exc.args[0]}") from None
        path = Path(vertices)
        check_path(g, path)
        return path


def check_path(g: Graph, path: Path) -> None:
    """Consecutive vertices adjacent, no vertex repeated except a closing one."""
    vs = path.vertices
    body = path.distinct()
    if len(set(body)) != len(body):
        seen = set()
        for v in body:
            if v in seen:
                raise VertexReuse(v)
            seen.add(v)
    for k in range(len(vs) - 1):
        if not g.has_edge(vs[k], vs[k + 1]):
            raise MissingJunctionEdge(k, vs[k], vs[k + 1])


def concat(g: Graph, paths: list[Path], close_with: int | None = None) -> Path:
    """Join paths end to start along existing edges.

    ``close_with`` appends one more vertex; when it (or the last path's end)
    equals the first vertex the result is a circuit.
    """
    pieces = list(paths)
    if close_with is not None:
        pieces.append(Path((close_with,)))
    out: list[int] = []
    seen: set[int] = set()
    for j, p in enumerate(pieces):
        if out and not g.has_edge(out[-1], p.first):
            raise MissingJunctionEdge(j, out[-1], p.first)
        for k, v in enumerate(p.vertices):
            closing = j == len(pieces) - 1 and k == len(p.vertices) - 1 and out and v == out[0]
            if v in seen and not closing:
                raise VertexReuse(v)
            seen.add(v)
            out.append(v)
    result = Path(tuple(out))
    check_path(g, result)
    return result


def _expand(expr: str, env: dict[str, int], templates: dict[str, str]) -> list[tuple[str, dict]]:
    """Split an expression into (template-or-label, env) pieces."""
    pieces = []
    for tok in expr.split():
        ref = _TEMPLATE_REF.match(tok)
        if ref is None:
            pieces.append((tok, env))
            continue
        name, idx = ref[1], ref[2]
        if name not in templates:
            raise TemplateInvalid(f"unknown template {name!r}")
        if idx is None:
            pieces.append((name, env))
        elif ".." in idx:
            lo, hi = (_eval_index(x, env) for x in idx.split(".."))
            pieces += [(name, {**env, "i": i}) for i in range(lo, hi + 1)]
        else:
            pieces.append((name, {**env, "i": _eval_index(idx, env)}))
    return pieces


def build_circuit(g: Graph, expr: str, env: dict[str, int], templates: dict[str, str]) -> Path:
    paths = []
    for name, e in _expand(expr, env, templates):
        if name in templates:
            paths.append(PathTemplate(name, templates[name]).instantiate(g, e))
        else:
            try:
                paths.append(Path((g.vertex(_resolve(name, e)),)))
            except KeyError as exc:
                raise TemplateInvalid(str(exc.args[0])) from None
    if len(paths) == 1 and paths[0].is_circuit:
        return paths[0]
    circ = concat(g, paths)
    if not circ.is_circuit:
        raise TemplateInvalid(f"{expr!r} does not close into a circuit")
    return circ


def build_two_factor(
    g: Graph, exprs: list[str], env: dict[str, int], templates: dict[str, str]
) -> TwoFactor:
    """Assemble circuit expressions into a spanning 2-regular edge set."""
    try:
        circuits = [build_circuit(g, x, env, templates) for x in exprs]
    except (MissingJunctionEdge, VertexReuse) as exc:
        raise TemplateInvalid(str(exc)) from None
    edges: set[int] = set()
    for c in circuits:
        ids = c.edge_ids(g)
        if edges & set(ids):
            raise TemplateInvalid("circuits share an edge")
        edges.update(ids)
    try:
        dec = decompose(g, edges)
    except ValueError as exc:
        raise TemplateInvalid(f"not a 2-factor: {exc}") from None
    if len(dec.circuits) != len(circuits):
        raise TemplateInvalid("circuits are not vertex-disjoint")
    return TwoFactor(tuple(sorted(edges)), dec)


@dataclass(frozen=True)
class WitnessPair:
    family: str
    params: tuple[int, ...]
    hamiltonian: TwoFactor
    disconnected: TwoFactor

    def validate(self) -> None:
        if self.hamiltonian.circuit_count != 1:
            raise TemplateInvalid(f"hamiltonian member has {self.hamiltonian.circuit_count} circuits")
        if self.disconnected.circuit_count != 2:
            raise TemplateInvalid(f"disconnected member has {self.disconnected.circuit_count} circuits")


def d_witness_pair(n: int, g: Graph | None = None) -> WitnessPair:
    if n < 8:
        raise OutOfRange("D(n) has no parity witnesses below n = 8")
    g = g if g is not None else d_graph(n)
    env = {"m": n // 3, "n": n}
    pair = WitnessPair(
        "D",
        (n,),
        build_two_factor(g, D_HAMILTONIAN[n % 3], env, D_TEMPLATES),
        build_two_factor(g, d_disconnected_formula(n), env, D_TEMPLATES),
    )
    pair.validate()
    return pair


def t_witness_pair(n: int, variant: int, g: Graph | None = None) -> WitnessPair:
    if n < 1:
        raise OutOfRange("T(n) needs n >= 1")
    ham, dis = t_formulas(variant)
    g = g if g is not None else t_graph(n, variant)
    env = {"n": n}
    pair = WitnessPair(
        f"T{variant}",
        (n,),
        build_two_factor(g, ham, env, T_TEMPLATES),
        build_two_factor(g, dis, env, T_TEMPLATES),
    )
    pair.validate()
    return pair


def validate_t_segment(g: Graph) -> None:
    """The segment paths must be walks of the segment graph and the circuit
    P3 must avoid P2 (and Q2, which covers the same vertices)."""
    env = {"i": 1}
    try:
        paths = {name: PathTemplate(name, text).instantiate(g, env) for name, text in T_TEMPLATES.items()}
    except (MissingJunctionEdge, VertexReuse) as exc:
        raise TemplateInvalid(str(exc)) from None
    p2, p3, q2 = set(paths["P2"].vertices), set(paths["P3"].vertices), set(paths["Q2"].vertices)
    if p2 & p3 or p2 != q2:
        raise TemplateInvalid("P3 is not disjoint from P2 / Q2")
    if len(paths["P1"]) != g.vertex_count or len(paths["Q1"]) != g.vertex_count:
        raise TemplateInvalid("P1 or Q1 is not hamiltonian in the segment")
