"""Expansion and contraction functors between tubes of adjacent rank.

A tube of rank p >= 2 contracts onto a tube of rank p-1 by deleting the
distinguished simple with index 1 from composition words and renaming
S_m to S'_{m-1}; the inclusion going the other way replaces the
distinguished small simple S'_{p-1} by the two-letter segment
(S_1, S_p).  The dual contraction deletes the index-p simple instead.
All three maps act on objects only; the content of the surrounding
theory is verified as dimension identities in the test suite.

Conventions: in the big tube the left simple is S_1, the right simple
is S_p, and the distinguished small simple is S'_{p-1}, so that the
translate carries the left simple to the right one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tubecat import (
    PointDescriptor,
    TubeObject,
    ext1_dim,
    hom_dim,
    indec_from_word,
)

__all__ = [
    "ExpansionContext",
    "LocalSequence",
    "contract",
    "expand",
    "coexpand",
    "connecting_sequence",
    "local_sequence",
    "perp_membership",
    "is_split",
]


@dataclass(frozen=True)
class ExpansionContext:
    """Wiring between a rank-p tube and its rank-(p-1) contraction."""

    big_point: PointDescriptor
    small_point: PointDescriptor

    def __post_init__(self):
        if self.big_point.rank < 2:
            raise ValueError("no contraction is available below rank 2")
        if self.small_point.rank != self.big_point.rank - 1:
            raise ValueError("small tube must have rank one less")

    @classmethod
    def for_rank(cls, p: int, label: str = "t") -> "ExpansionContext":
        big = PointDescriptor(label=label, kind="exceptional", rank=p)
        small = PointDescriptor(label=label + "'", kind="exceptional", rank=p - 1)
        return cls(big, small)

    @property
    def rank(self) -> int:
        return self.big_point.rank

    @property
    def lambda_index(self) -> int:
        return 1

    @property
    def rho_index(self) -> int:
        return self.rank

    @property
    def bar_index(self) -> int:
        return self.rank - 1

    @property
    def s_lambda(self) -> TubeObject:
        return TubeObject.simple(self.big_point, self.lambda_index)

    @property
    def s_rho(self) -> TubeObject:
        return TubeObject.simple(self.big_point, self.rho_index)

    @property
    def s_bar(self) -> TubeObject:
        return TubeObject.simple(self.small_point, self.bar_index)


def _check_big(ctx: ExpansionContext, a: TubeObject):
    if a.point != ctx.big_point:
        raise ValueError(f"object lives at {a.point.label}, not the big tube")


def _check_small(ctx: ExpansionContext, b: TubeObject):
    if b.point != ctx.small_point:
        raise ValueError(f"object lives at {b.point.label}, not the small tube")


def contract(ctx: ExpansionContext, a: TubeObject) -> TubeObject:
    """Left adjoint on objects: delete S_1 letters, rename S_m to S'_{m-1}.

    The surviving letters of a uniserial word stay a single cyclically
    descending word mod p-1, so each summand contracts to at most one
    uniserial.  Kills exactly the copies of S_1.
    """
    _check_big(ctx, a)
    out = []
    for u in a.summands:
        letters = [m - 1 for m in u.word() if m != 1]
        if letters:
            out.append(indec_from_word(ctx.small_point, letters))
    return TubeObject.of(ctx.small_point, out)


def expand(ctx: ExpansionContext, b: TubeObject) -> TubeObject:
    """The inclusion on objects.

    Letterwise S'_m becomes S_{m+1} for m <= p-2 while the distinguished
    S'_{p-1} becomes the segment (S_1, S_p); the concatenation is again
    a single uniserial word mod p.
    """
    _check_small(ctx, b)
    p = ctx.rank
    out = []
    for u in b.summands:
        letters: list[int] = []
        for m in u.word():
            if m == p - 1:
                letters.extend((1, p))
            else:
                letters.append(m + 1)
        out.append(indec_from_word(ctx.big_point, letters))
    return TubeObject.of(ctx.big_point, out)


def coexpand(ctx: ExpansionContext, a: TubeObject) -> TubeObject:
    """Right adjoint on objects: delete S_p, send S_1 to S'_{p-1}."""
    _check_big(ctx, a)
    p = ctx.rank
    out = []
    for u in a.summands:
        letters = []
        for m in u.word():
            if m == p:
                continue
            letters.append(p - 1 if m == 1 else m - 1)
        if letters:
            out.append(indec_from_word(ctx.small_point, letters))
    return TubeObject.of(ctx.small_point, out)


def connecting_sequence(ctx: ExpansionContext):
    """The distinguished non-split extension of the left simple by the right.

    Returns (right simple, expanded distinguished simple, left simple);
    the middle term is the length-2 uniserial with word (S_1, S_p).
    """
    middle = expand(ctx, ctx.s_bar)
    return ctx.s_rho, middle, ctx.s_lambda


@dataclass(frozen=True)
class LocalSequence:
    """The four-term exact sequence 0 -> A' -> A -> Abar -> A'' -> 0.

    A' and A'' are direct sums of copies of the left simple and Abar is
    the expansion of the contraction of A.
    """

    a_prime: TubeObject
    a: TubeObject
    a_bar: TubeObject
    a_dblprime: TubeObject

    def to_json_dict(self) -> dict:
        return {
            "A'": self.a_prime.to_json_dict(),
            "A": self.a.to_json_dict(),
            "Abar": self.a_bar.to_json_dict(),
            "A''": self.a_dblprime.to_json_dict(),
        }


def local_sequence(ctx: ExpansionContext, a: TubeObject) -> LocalSequence:
    """Compute the four-term sequence summand by summand.

    A uniserial contributes a copy of the left simple to A' when its
    socle is the left simple, and a copy to A'' when its top is the
    right simple.
    """
    _check_big(ctx, a)
    lam = ctx.lambda_index
    rho = ctx.rho_index
    n_prime = sum(1 for u in a.summands if u.socle == lam)
    n_dbl = sum(1 for u in a.summands if u.top == rho)
    s_lam = ctx.s_lambda.summands[0]
    return LocalSequence(
        a_prime=TubeObject.of(ctx.big_point, (s_lam,) * n_prime),
        a=a,
        a_bar=expand(ctx, contract(ctx, a)),
        a_dblprime=TubeObject.of(ctx.big_point, (s_lam,) * n_dbl),
    )


def perp_membership(ctx: ExpansionContext, a: TubeObject, field_obj=None):
    """Membership flags (in the right-perp of S_1, in the left-perp of S_p).

    Both flags are computed directly from Hom and Ext^1 dimensions; they
    always agree by Serre duality.
    """
    _check_big(ctx, a)
    lam = ctx.s_lambda
    rho = ctx.s_rho
    in_lambda_perp = (
        hom_dim(lam, a, field_obj) == 0 and ext1_dim(lam, a, field_obj) == 0
    )
    in_perp_rho = (
        hom_dim(a, rho, field_obj) == 0 and ext1_dim(a, rho, field_obj) == 0
    )
    return in_lambda_perp, in_perp_rho


def is_split(ctx: ExpansionContext) -> bool:
    """Tube expansions are never split: the two simples differ."""
    return False
