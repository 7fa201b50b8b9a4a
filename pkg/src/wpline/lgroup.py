"""Arithmetic in the rank-1 grading group attached to a weight sequence.

The group has generators x_1, ..., x_n, c subject to p_i * x_i = c.
Every element has a unique normal form with 0 <= l_i < p_i and one free
integer coefficient on c; all arithmetic funnels through
:func:`normalize`, so values can be compared, hashed and sorted
directly.  The coefficient-copy injection between the groups of two
weight sequences differing in one entry lives here as well; it is a
plain set map and deliberately not additive.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "WeightError",
    "LElement",
    "check_weights",
    "normalize",
    "zero",
    "x_gen",
    "c_gen",
    "add",
    "negate",
    "phi",
    "in_image_phi",
    "phi_preimage",
]


class WeightError(ValueError):
    """Invalid weight sequence or mismatched group data."""


def check_weights(p) -> tuple[int, ...]:
    """Validate a weight sequence and return it as a tuple.

    Every entry must be a positive integer; the empty sequence is
    allowed and denotes the group with the single free generator c.
    """
    pt = tuple(int(q) for q in p)
    if any(q < 1 for q in pt):
        raise WeightError(f"weights must be >= 1, got {pt}")
    return pt


@dataclass(frozen=True)
class LElement:
    """A grading-group element in normal form.

    Attributes:
        p: the weight sequence it lives over.
        coeffs: coefficients on x_1..x_n with 0 <= coeffs[i] < p[i].
        c: the unrestricted integer coefficient on c.
    """

    p: tuple[int, ...]
    coeffs: tuple[int, ...]
    c: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_weights(self.p))
        object.__setattr__(self, "coeffs", tuple(int(x) for x in self.coeffs))
        object.__setattr__(self, "c", int(self.c))
        if len(self.coeffs) != len(self.p):
            raise WeightError(
                f"{len(self.coeffs)} coefficients for {len(self.p)} weights"
            )
        for q, l in zip(self.p, self.coeffs):
            if not 0 <= l < q:
                raise WeightError(f"coefficient {l} outside [0, {q})")

    @property
    def sort_key(self):
        # Lexicographic on (c, coeffs): deterministic iteration order only,
        # no mathematical meaning.
        return (self.c, self.coeffs)

    def __add__(self, other: "LElement") -> "LElement":
        return add(self, other)

    def __sub__(self, other: "LElement") -> "LElement":
        return add(self, negate(other))

    def __neg__(self) -> "LElement":
        return negate(self)

    def __str__(self):
        return f"({','.join(str(x) for x in self.coeffs)}|{self.c})"

    def key(self) -> str:
        """Degree key used in JSON maps: "l1,l2,...,ln|c"."""
        return f"{','.join(str(x) for x in self.coeffs)}|{self.c}"

    def to_json_dict(self) -> dict:
        return {"l": list(self.coeffs), "c": self.c}


def parse_key(key: str, p) -> LElement:
    """Inverse of :meth:`LElement.key`."""
    head, _, tail = key.partition("|")
    coeffs = [int(x) for x in head.split(",") if x != ""]
    return normalize(coeffs, int(tail), p)


def from_json_dict(d: dict, p) -> LElement:
    return normalize(d["l"], d["c"], p)


def normalize(raw_coeffs, raw_c: int, p) -> LElement:
    """Reduce raw coefficients into normal form.

    Each x_i coefficient is reduced into [0, p_i) and the overflow is
    pushed onto c through the relation p_i * x_i = c.  Idempotent and
    constant on cosets of the relations.
    """
    pt = check_weights(p)
    raw = [int(x) for x in raw_coeffs]
    if len(raw) != len(pt):
        raise WeightError(f"{len(raw)} coefficients for {len(pt)} weights")
    c = int(raw_c)
    coeffs = []
    for q, l in zip(pt, raw):
        quo, rem = divmod(l, q)
        coeffs.append(rem)
        c += quo
    return LElement(pt, tuple(coeffs), c)


def zero(p) -> LElement:
    pt = check_weights(p)
    return LElement(pt, (0,) * len(pt), 0)


def x_gen(p, i: int) -> LElement:
    """The generator x_i (1-based).  Equals c when p_i = 1."""
    pt = check_weights(p)
    if not 1 <= i <= len(pt):
        raise WeightError(f"generator index {i} outside 1..{len(pt)}")
    raw = [0] * len(pt)
    raw[i - 1] = 1
    return normalize(raw, 0, pt)


def c_gen(p) -> LElement:
    pt = check_weights(p)
    return LElement(pt, (0,) * len(pt), 1)


def _same_group(a: LElement, b: LElement):
    if a.p != b.p:
        raise WeightError(f"mixed weight sequences {a.p} and {b.p}")


def add(a: LElement, b: LElement) -> LElement:
    _same_group(a, b)
    return normalize(
        [x + y for x, y in zip(a.coeffs, b.coeffs)], a.c + b.c, a.p
    )


def negate(a: LElement) -> LElement:
    return normalize([-x for x in a.coeffs], -a.c, a.p)


def _check_reduction(p_big, j: int) -> tuple[int, ...]:
    """Return the reduced weight sequence p' with p'_j = p_j - 1."""
    pt = check_weights(p_big)
    if not 1 <= j <= len(pt):
        raise WeightError(f"reduction index {j} outside 1..{len(pt)}")
    if pt[j - 1] < 2:
        raise WeightError(f"invalid reduction index {j}: weight is 1")
    small = list(pt)
    small[j - 1] -= 1
    return tuple(small)


def phi(l: LElement, p_big, j: int) -> LElement:
    """Copy the normal form of an element over p' into the group over p.

    Requires p'_i = p_i - delta_ij and p_j >= 2.  No renormalization is
    needed because l_i < p'_i <= p_i.  The map is injective but not a
    group homomorphism.
    """
    small = _check_reduction(p_big, j)
    if l.p != small:
        raise WeightError(
            f"element over {l.p} is not over the reduction {small} of {tuple(p_big)}"
        )
    return LElement(tuple(check_weights(p_big)), l.coeffs, l.c)


def in_image_phi(m: LElement, j: int) -> bool:
    """Image membership: the j-th coefficient must avoid p_j - 1."""
    if not 1 <= j <= len(m.p):
        raise WeightError(f"reduction index {j} outside 1..{len(m.p)}")
    return m.coeffs[j - 1] != m.p[j - 1] - 1


def phi_preimage(m: LElement, j: int) -> LElement:
    """Inverse of phi on its image."""
    small = _check_reduction(m.p, j)
    if not in_image_phi(m, j):
        raise WeightError(
            f"{m} has coefficient p_{j}-1 at position {j}; not in the image"
        )
    return LElement(small, m.coeffs, m.c)
