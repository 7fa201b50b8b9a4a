"""Valued Ext-quivers on simple objects and the two rewrites.

Vertices carry the degree of their endomorphism division ring over the
base field; an arrow S -> T with valuation (s, t) records the Ext^1
dimension over End(S) and over End(T)-opposite.  The consistency law
s * deg(S) = t * deg(T) is enforced at construction.

Contracting merges a source/target pair joined by a (1,1) arrow into a
single vertex; expanding splits a degree-1 vertex into such a pair.
The two rewrites are mutually inverse where defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tubecat import PointDescriptor, TubeObject, ext1_dim_oracle, simples_of

__all__ = [
    "QuiverError",
    "RewriteError",
    "ValuedQuiver",
    "quiver_of",
    "simple_label",
    "rewrite_contract",
    "rewrite_expand",
    "to_dot",
    "to_json_dict",
    "from_json_dict",
]


class QuiverError(ValueError):
    """Malformed valued quiver data."""


class RewriteError(ValueError):
    """A rewrite precondition failed; the message names the condition."""


@dataclass(frozen=True)
class ValuedQuiver:
    """Immutable valued quiver.

    vertices: sorted tuple of (label, division ring degree);
    arrows: sorted tuple of (source, target, s, t), absent means (0,0).
    """

    vertices: tuple[tuple[str, int], ...]
    arrows: tuple[tuple[str, str, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        labels = [v for v, _ in self.vertices]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate vertex labels")
        deg = dict(self.vertices)
        for v, d in self.vertices:
            if d < 1:
                raise QuiverError(f"vertex {v} has degree {d} < 1")
        for u, v, s, t in self.arrows:
            if u not in deg or v not in deg:
                raise QuiverError(f"arrow {u}->{v} touches a missing vertex")
            if s < 1 or t < 1:
                raise QuiverError(f"arrow {u}->{v} carries a zero valuation")
            if s * deg[u] != t * deg[v]:
                raise QuiverError(
                    f"valuation ({s},{t}) on {u}->{v} violates "
                    f"s*deg({u})={s * deg[u]} != t*deg({v})={t * deg[v]}"
                )

    @classmethod
    def make(cls, vertices: dict, arrows: dict) -> "ValuedQuiver":
        return cls(
            tuple(vertices.items()),
            tuple((u, v, s, t) for (u, v), (s, t) in arrows.items()),
        )

    def degree(self, label: str) -> int:
        return dict(self.vertices)[label]

    def has_vertex(self, label: str) -> bool:
        return any(v == label for v, _ in self.vertices)

    def valuation(self, u: str, v: str) -> tuple[int, int]:
        for a, b, s, t in self.arrows:
            if a == u and b == v:
                return (s, t)
        return (0, 0)

    def out_targets(self, u: str) -> list[str]:
        return [b for a, b, _, _ in self.arrows if a == u]

    def in_sources(self, v: str) -> list[str]:
        return [a for a, b, _, _ in self.arrows if b == v]

    def relabel(self, mapping: dict) -> "ValuedQuiver":
        f = lambda x: mapping.get(x, x)
        return ValuedQuiver(
            tuple((f(v), d) for v, d in self.vertices),
            tuple((f(a), f(b), s, t) for a, b, s, t in self.arrows),
        )


def simple_label(point: PointDescriptor, j: int) -> str:
    """Canonical vertex label for the j-th simple at a point."""
    if point.kind == "exceptional":
        return f"S_{point.label},{j}"
    return f"S_{point.label}"


def quiver_of(points) -> ValuedQuiver:
    """Ext-quiver of the simples at a finite list of points.

    An exceptional tube of rank p contributes a p-cycle of (1,1) arrows
    (a loop when p = 1); an ordinary point of residue degree d
    contributes a single vertex of degree d with a (1,1) loop.  The
    valuations are read off from Ext^1 dimensions, not hard-coded.
    """
    vertices = {}
    arrows = {}
    for point in points:
        simples = simples_of(point)
        deg = point.residue_degree
        for s in simples:
            vertices[simple_label(point, s.top)] = deg
        for s in simples:
            for t in simples:
                e = ext1_dim_oracle(
                    TubeObject.of(point, (s,)), TubeObject.of(point, (t,))
                )
                if e:
                    if e % deg:
                        raise QuiverError("Ext dimension not divisible by degree")
                    arrows[(simple_label(point, s.top),
                            simple_label(point, t.top))] = (e // deg, e // deg)
    return ValuedQuiver.make(vertices, arrows)


def rewrite_contract(q: ValuedQuiver, s_lambda: str, s_rho: str,
                     new_label: str = "Sbar") -> ValuedQuiver:
    """Merge the pair (s_lambda, s_rho) into a single vertex.

    Preconditions, each refused with a diagnostic naming it:
    the joining arrow must carry valuation (1,1); neither endpoint may
    carry a loop; s_lambda must have no other out-arrow and s_rho no
    other in-arrow.  Incoming arrows of s_lambda retarget to the merged
    vertex, outgoing arrows of s_rho re-source from it, and an arrow
    s_rho -> s_lambda becomes a loop.
    """
    for v in (s_lambda, s_rho):
        if not q.has_vertex(v):
            raise RewriteError(f"missing vertex {v}")
    if s_lambda == s_rho:
        raise RewriteError("the two vertices must be distinct")
    if q.valuation(s_lambda, s_rho) != (1, 1):
        raise RewriteError(
            f"arrow {s_lambda}->{s_rho} must carry valuation (1,1), "
            f"found {q.valuation(s_lambda, s_rho)}"
        )
    if q.valuation(s_lambda, s_lambda) != (0, 0):
        raise RewriteError(f"loop at {s_lambda} (self-extension)")
    if q.valuation(s_rho, s_rho) != (0, 0):
        raise RewriteError(f"loop at {s_rho} (self-extension)")
    extra_out = [v for v in q.out_targets(s_lambda) if v != s_rho]
    if extra_out:
        raise RewriteError(
            f"extra arrow out of {s_lambda}: {s_lambda}->{extra_out[0]}"
        )
    extra_in = [u for u in q.in_sources(s_rho) if u != s_lambda]
    if extra_in:
        raise RewriteError(
            f"extra arrow into {s_rho}: {extra_in[0]}->{s_rho}"
        )
    if q.has_vertex(new_label) and new_label not in (s_lambda, s_rho):
        raise RewriteError(f"merged label {new_label} already in use")

    deg = dict(q.vertices)
    vertices = {v: d for v, d in q.vertices if v not in (s_lambda, s_rho)}
    vertices[new_label] = deg[s_lambda]
    arrows = {}
    for u, v, s, t in q.arrows:
        if (u, v) == (s_lambda, s_rho):
            continue
        if (u, v) == (s_rho, s_lambda):
            arrows[(new_label, new_label)] = (s, t)
        elif v == s_lambda:
            arrows[(u, new_label)] = (s, t)
        elif u == s_rho:
            arrows[(new_label, v)] = (s, t)
        else:
            arrows[(u, v)] = (s, t)
    return ValuedQuiver.make(vertices, arrows)


def rewrite_expand(q: ValuedQuiver, s_bar: str,
                   lambda_label: str | None = None,
                   rho_label: str | None = None) -> ValuedQuiver:
    """Split a degree-1 vertex into an arrow lambda -> rho with valuation (1,1).

    Incoming arrows of the vertex retarget to the new source, outgoing
    arrows re-source from the new target, and a loop becomes an arrow
    rho -> lambda with the same valuation.
    """
    if not q.has_vertex(s_bar):
        raise RewriteError(f"missing vertex {s_bar}")
    if q.degree(s_bar) != 1:
        raise RewriteError(
            f"vertex {s_bar} has division ring degree {q.degree(s_bar)}, "
            "expansion requires degree 1"
        )
    lam = lambda_label if lambda_label is not None else s_bar + ".lam"
    rho = rho_label if rho_label is not None else s_bar + ".rho"
    for fresh in (lam, rho):
        if fresh == s_bar or (q.has_vertex(fresh) and fresh != s_bar):
            raise RewriteError(f"label {fresh} already in use")
    if lam == rho:
        raise RewriteError("the two new labels must be distinct")

    vertices = {v: d for v, d in q.vertices if v != s_bar}
    vertices[lam] = 1
    vertices[rho] = 1
    arrows = {}
    for u, v, s, t in q.arrows:
        if u == s_bar and v == s_bar:
            arrows[(rho, lam)] = (s, t)
        elif v == s_bar:
            arrows[(u, lam)] = (s, t)
        elif u == s_bar:
            arrows[(rho, v)] = (s, t)
        else:
            arrows[(u, v)] = (s, t)
    arrows[(lam, rho)] = (1, 1)
    return ValuedQuiver.make(vertices, arrows)


def to_dot(q: ValuedQuiver) -> str:
    """Deterministic DOT text: sorted labels, sorted arrows."""
    lines = ["digraph ext_quiver {"]
    for v, d in q.vertices:
        lines.append(f'  "{v}" [deg={d}];')
    for u, v, s, t in q.arrows:
        lines.append(f'  "{u}" -> "{v}" [label="({s},{t})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(q: ValuedQuiver) -> dict:
    return {
        "vertices": [{"label": v, "deg": d} for v, d in q.vertices],
        "arrows": [
            {"from": u, "to": v, "val": [s, t]} for u, v, s, t in q.arrows
        ],
    }


def from_json_dict(d: dict) -> ValuedQuiver:
    return ValuedQuiver.make(
        {v["label"]: v["deg"] for v in d["vertices"]},
        {(a["from"], a["to"]): tuple(a["val"]) for a in d["arrows"]},
    )
