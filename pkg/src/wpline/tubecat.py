"""Finite length sheaves supported at one point, as a tube of rank p.

Objects are finite multisets of uniserial indecomposables, each given
by its top simple and its length.  The same objects are realized as
nilpotent representations of the cyclic quiver with arrows j -> j-1
(indices mod p, in 1..p), and Hom spaces are computed two independent
ways:

* engine: dimension of the space of intertwiners of the nilpotent
  representations, by exact linear algebra;
* oracle: a closed-form overlap count on composition words.

Ext^1 is computed from Hom through the translate tau (rotation of the
simple index by -1) and cross-checked by a recursion along top/radical
exact sequences that never needs an Ext^2 term.

The arrow orientation j -> j-1 pins down the convention
ext1(S_j, S_{j'}) != 0 iff j' = j - 1 (mod p).  All dimensions are
reported over the base field, so a point with residue degree d
contributes a factor d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .fields import DEFAULT_FIELD

__all__ = [
    "PointDescriptor",
    "TubeIndec",
    "TubeObject",
    "NilpRep",
    "simples_of",
    "to_nilprep",
    "hom_dim",
    "hom_dim_oracle",
    "ext1_dim",
    "ext1_dim_oracle",
    "tau",
    "tau_inverse",
    "disjoint_support",
    "indecomposables",
    "objects_up_to_length",
]


@dataclass(frozen=True)
class PointDescriptor:
    """A closed point carrying a tube.

    kind "exceptional" has a tube rank >= 1 and residue degree 1;
    kind "ordinary" has tube rank 1 and residue degree d >= 1
    (d = 1 is a rational point).
    """

    label: str
    kind: str
    rank: int
    residue_degree: int = 1

    def __post_init__(self):
        if self.kind not in ("exceptional", "ordinary"):
            raise ValueError(f"unknown point kind {self.kind!r}")
        if self.kind == "exceptional":
            if self.rank < 1:
                raise ValueError("exceptional rank must be >= 1")
            if self.residue_degree != 1:
                raise ValueError("exceptional points are rational here")
        else:
            if self.rank != 1:
                raise ValueError("ordinary points carry a rank-1 tube")
            if self.residue_degree < 1:
                raise ValueError("residue degree must be >= 1")

    @classmethod
    def exceptional(cls, index: int, rank: int) -> "PointDescriptor":
        return cls(label=str(index), kind="exceptional", rank=rank)

    @classmethod
    def ordinary(cls, label: str, residue_degree: int = 1) -> "PointDescriptor":
        return cls(label=label, kind="ordinary", rank=1,
                   residue_degree=residue_degree)


@dataclass(frozen=True)
class TubeIndec:
    """Uniserial indecomposable: top simple index and length.

    Its composition word from top to socle is
    (S_a, S_{a-1}, ..., S_{a-l+1}) with indices mod p in 1..p; the word
    is derived, never stored.
    """

    point: PointDescriptor
    top: int
    length: int

    def __post_init__(self):
        p = self.point.rank
        if not 1 <= self.top <= p:
            raise ValueError(f"top {self.top} outside 1..{p}")
        if self.length < 1:
            raise ValueError("length must be >= 1")

    def word(self) -> tuple[int, ...]:
        p = self.point.rank
        return tuple(((self.top - 1 - t) % p) + 1 for t in range(self.length))

    @property
    def socle(self) -> int:
        p = self.point.rank
        return ((self.top - self.length) % p) + 1

    def to_json_dict(self) -> dict:
        return {"point": self.point.label, "top": self.top, "len": self.length}


def indec_from_word(point: PointDescriptor, word) -> TubeIndec:
    """Rebuild an indecomposable from a top-to-socle word, validating it."""
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    p = point.rank
    for a, b in zip(word, word[1:]):
        if b != ((a - 2) % p) + 1:
            raise ValueError(f"word {word} is not cyclically descending mod {p}")
    return TubeIndec(point, word[0], len(word))


@dataclass(frozen=True)
class TubeObject:
    """Finite multiset of uniserial summands at a single point."""

    point: PointDescriptor
    summands: tuple[TubeIndec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for u in self.summands:
            if u.point != self.point:
                raise ValueError("summands at different points")
        object.__setattr__(
            self,
            "summands",
            tuple(sorted(self.summands, key=lambda u: (u.top, u.length))),
        )

    @classmethod
    def zero(cls, point: PointDescriptor) -> "TubeObject":
        return cls(point, ())

    @classmethod
    def simple(cls, point: PointDescriptor, a: int) -> "TubeObject":
        return cls(point, (TubeIndec(point, a, 1),))

    @classmethod
    def uniserial(cls, point: PointDescriptor, top: int, length: int) -> "TubeObject":
        return cls(point, (TubeIndec(point, top, length),))

    @classmethod
    def of(cls, point: PointDescriptor, summands) -> "TubeObject":
        return cls(point, tuple(summands))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def total_length(self) -> int:
        return sum(u.length for u in self.summands)

    def dim_vector(self) -> tuple[int, ...]:
        """Composition factor multiplicities, indexed by simple 1..p."""
        p = self.point.rank
        dims = [0] * p
        for u in self.summands:
            for a in u.word():
                dims[a - 1] += 1
        return tuple(dims)

    def direct_sum(self, other: "TubeObject") -> "TubeObject":
        if other.point != self.point:
            raise ValueError("direct sum across different points")
        return TubeObject(self.point, self.summands + other.summands)

    def to_json_dict(self) -> list:
        return [u.to_json_dict() for u in self.summands]


def object_from_json(point: PointDescriptor, data: list) -> TubeObject:
    return TubeObject(
        point, tuple(TubeIndec(point, d["top"], d["len"]) for d in data)
    )


def simples_of(point: PointDescriptor) -> list[TubeIndec]:
    """The simple objects of the tube at the given point."""
    return [TubeIndec(point, a, 1) for a in range(1, point.rank + 1)]


def disjoint_support(a: TubeObject, b: TubeObject) -> bool:
    """True when the two objects live at different points."""
    return a.point != b.point


class NilpRep:
    """Nilpotent representation of the cyclic quiver with arrows j -> j-1.

    dims[v-1] is the dimension at vertex v; maps[j] is the matrix of
    the arrow out of vertex j, of shape (dims at j-1, dims at j).
    """

    def __init__(self, field_obj, dims, maps):
        self.field = field_obj
        self.dims = tuple(int(d) for d in dims)
        self.maps = dict(maps)
        p = len(self.dims)
        for j in range(1, p + 1):
            t = ((j - 2) % p) + 1
            want = (self.dims[t - 1], self.dims[j - 1])
            if self.maps[j].shape != want:
                raise ValueError(
                    f"arrow {j}->{t} has shape {self.maps[j].shape}, expected {want}"
                )

    @property
    def rank(self) -> int:
        return len(self.dims)

    def cycle_composite(self, v: int = 1):
        """The composite of all p arrows starting and ending at vertex v."""
        p = self.rank
        f = self.field
        m = f.eye(self.dims[v - 1])
        cur = v
        for _ in range(p):
            m = f.matmul(self.maps[cur], m)
            cur = ((cur - 2) % p) + 1
        return m

    def is_nilpotent(self) -> bool:
        f = self.field
        for v in range(1, self.rank + 1):
            d = self.dims[v - 1]
            if d == 0:
                continue
            m = self.cycle_composite(v)
            power = f.eye(d)
            for _ in range(d):
                power = f.matmul(m, power)
            if not f.is_zero(power):
                return False
        return True

    def validate(self) -> list[str]:
        problems = []
        if not self.is_nilpotent():
            problems.append("cycle composite is not nilpotent")
        return problems


def to_nilprep(obj: TubeObject, field_obj=None) -> NilpRep:
    """Standard uniserial matrices: one basis vector per composition factor.

    The arrow out of vertex j sends each basis vector to the next one
    down the word and the socle vector to zero; direct sums are block
    diagonal.  Ordinary points use the rank-1 cyclic quiver, a single
    nilpotent matrix.
    """
    f = field_obj if field_obj is not None else DEFAULT_FIELD
    p = obj.point.rank
    dims = list(obj.dim_vector()) if not obj.is_zero else [0] * p

    # (summand index, position t) -> (vertex, index inside the vertex)
    counters = [0] * p
    slot = {}
    for si, u in enumerate(obj.summands):
        for t, a in enumerate(u.word()):
            slot[(si, t)] = (a, counters[a - 1])
            counters[a - 1] += 1

    maps = {}
    for j in range(1, p + 1):
        t = ((j - 2) % p) + 1
        maps[j] = f.zeros(dims[t - 1], dims[j - 1])
    for si, u in enumerate(obj.summands):
        for t in range(u.length - 1):
            a, idx = slot[(si, t)]
            b, jdx = slot[(si, t + 1)]
            maps[a][jdx, idx] = f.element(1)
    return NilpRep(f, dims, maps)


def _intertwiner_dim(ra: NilpRep, rb: NilpRep) -> int:
    """dim of {(f_j): f_{j-1} a_j = b_j f_j for all arrows j}."""
    import numpy as np

    f = ra.field
    p = ra.rank
    sizes = [rb.dims[j] * ra.dims[j] for j in range(p)]
    total = sum(sizes)
    if total == 0:
        return 0
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)

    blocks = []
    for j in range(1, p + 1):
        t = ((j - 2) % p) + 1
        rows = rb.dims[t - 1] * ra.dims[j - 1]
        if rows == 0:
            continue
        row = f.zeros(rows, total)
        # vec(f_t @ A_j) = (A_j^T kron I) vec(f_t)
        if sizes[t - 1]:
            row[:, offsets[t - 1] : offsets[t]] = f.kron(
                ra.maps[j].T, f.eye(rb.dims[t - 1])
            )
        # vec(B_j @ f_j) = (I kron B_j) vec(f_j)
        if sizes[j - 1]:
            row[:, offsets[j - 1] : offsets[j]] = f.sub(
                row[:, offsets[j - 1] : offsets[j]],
                f.kron(f.eye(ra.dims[j - 1]), rb.maps[j]),
            )
        if not f.is_zero(row):
            blocks.append(row)
    if not blocks:
        return total
    system = np.vstack(blocks)
    return total - f.rank(system)


def hom_dim(a: TubeObject, b: TubeObject, field_obj=None) -> int:
    """Hom dimension over the base field, by intertwiner linear algebra.

    Objects at different points have disjoint support and Hom 0; use
    :func:`disjoint_support` to distinguish that case from a genuine
    vanishing.
    """
    if disjoint_support(a, b):
        return 0
    if a.is_zero or b.is_zero:
        return 0
    d = _intertwiner_dim(
        to_nilprep(a, field_obj), to_nilprep(b, field_obj)
    )
    return d * a.point.residue_degree


def _overlap(p: int, a: int, la: int, b: int, lb: int) -> int:
    return sum(
        1 for t in range(1, min(la, lb) + 1) if (t - (a - b + lb)) % p == 0
    )


def hom_dim_oracle(a: TubeObject, b: TubeObject) -> int:
    """Closed-form overlap count, summed over summand pairs."""
    if disjoint_support(a, b):
        return 0
    p = a.point.rank
    total = 0
    for u in a.summands:
        for v in b.summands:
            total += _overlap(p, u.top, u.length, v.top, v.length)
    return total * a.point.residue_degree


def tau(x: TubeObject | TubeIndec):
    """The translate: rotate every top index by -1, keep lengths."""
    if isinstance(x, TubeIndec):
        p = x.point.rank
        return TubeIndec(x.point, ((x.top - 2) % p) + 1, x.length)
    return TubeObject(x.point, tuple(tau(u) for u in x.summands))


def tau_inverse(x: TubeObject | TubeIndec):
    if isinstance(x, TubeIndec):
        p = x.point.rank
        return TubeIndec(x.point, (x.top % p) + 1, x.length)
    return TubeObject(x.point, tuple(tau_inverse(u) for u in x.summands))


def ext1_dim(a: TubeObject, b: TubeObject, field_obj=None) -> int:
    """Ext^1 dimension via the translate: hom_dim(b, tau(a))."""
    if disjoint_support(a, b):
        return 0
    return hom_dim(b, tau(a), field_obj)


@lru_cache(maxsize=None)
def _ext1_indec(u: TubeIndec, v: TubeIndec) -> int:
    """Recursive Ext^1 on indecomposables, with no Ext^2 correction.

    Peels the top off u first, then off v, using alternating sums along
    0 -> rad -> object -> top -> 0 with the overlap-count Hom oracle.
    Base case: ext1(S_j, S_j') = residue degree iff j' = j-1 (mod p).
    """
    point = u.point
    p = point.rank
    one = TubeObject.of(point, (u,))
    two = TubeObject.of(point, (v,))
    if u.length == 1 and v.length == 1:
        hit = (v.top - (u.top - 1)) % p == 0
        return point.residue_degree if hit else 0
    if u.length > 1:
        rad = TubeIndec(point, ((u.top - 2) % p) + 1, u.length - 1)
        top = TubeIndec(point, u.top, 1)
        rad_o = TubeObject.of(point, (rad,))
        top_o = TubeObject.of(point, (top,))
        return (
            _ext1_indec(rad, v)
            + _ext1_indec(top, v)
            - hom_dim_oracle(top_o, two)
            - hom_dim_oracle(rad_o, two)
            + hom_dim_oracle(one, two)
        )
    rad = TubeIndec(point, ((v.top - 2) % p) + 1, v.length - 1)
    top = TubeIndec(point, v.top, 1)
    rad_o = TubeObject.of(point, (rad,))
    top_o = TubeObject.of(point, (top,))
    return (
        _ext1_indec(u, rad)
        + _ext1_indec(u, top)
        - hom_dim_oracle(one, rad_o)
        - hom_dim_oracle(one, top_o)
        + hom_dim_oracle(one, two)
    )


def ext1_dim_oracle(a: TubeObject, b: TubeObject) -> int:
    """Long-exact-sequence recursion, independent of the translate route."""
    if disjoint_support(a, b):
        return 0
    return sum(
        _ext1_indec(u, v) for u in a.summands for v in b.summands
    )


def indecomposables(point: PointDescriptor, max_length: int) -> list[TubeIndec]:
    """All indecomposables of length <= max_length at the point."""
    return [
        TubeIndec(point, a, l)
        for l in range(1, max_length + 1)
        for a in range(1, point.rank + 1)
    ]


def objects_up_to_length(point: PointDescriptor, max_length: int,
                         include_zero: bool = True):
    """Yield every multiset of indecomposables with total length <= max_length."""
    indecs = indecomposables(point, max_length)

    def rec(start: int, budget: int, picked: list):
        if include_zero or picked:
            yield TubeObject.of(point, tuple(picked))
        for i in range(start, len(indecs)):
            u = indecs[i]
            if u.length > budget:
                continue
            picked.append(u)
            yield from rec(i, budget - u.length, picked)
            picked.pop()

    yield from rec(0, max_length, [])


def random_object(point: PointDescriptor, rng, max_total: int) -> TubeObject:
    """Random multiset with total length <= max_total (possibly zero)."""
    budget = int(rng.integers(0, max_total + 1))
    picked = []
    while budget > 0:
        l = int(rng.integers(1, budget + 1))
        a = int(rng.integers(1, point.rank + 1))
        picked.append(TubeIndec(point, a, l))
        budget -= l
    return TubeObject.of(point, tuple(picked))
