"""Graded modules over the weighted homogeneous coordinate ring, windowed.

The ring on u, v, x_1..x_n mod (x_i^{p_i} + lam_{i1} u - lam_{i0} v) is
graded by the rank-1 group of :mod:`wpline.lgroup` with deg u = deg v =
c and deg x_i = x_i.  A module is truncated to the finite degree window
0 <= c-coefficient <= N: dimensions per degree plus one matrix per
generator and degree.  Degrees missing from the dims mapping are
*undefined* (outside the truncation), not zero; every checker works on
the interior where all the composites it needs are defined.

The three weight-change functors act degree-wise by coefficient
copying:

* the inclusion direction fills in the missing x_j layer and lets x_j
  act as the identity out of degrees with j-th coefficient 0;
* the left adjoint reads off the layer at coefficient + 1 and squares
  the x_j action at the top coefficient;
* the right adjoint reads off the layer at the same coefficient and
  squares the x_j action at coefficient 0.

All identities between them hold as literal matrix equalities in the
canonical bases, which the test suite exploits.
"""

from __future__ import annotations

import dataclasses
import warnings
from dataclasses import dataclass

import numpy as np

from . import lgroup
from .fields import DEFAULT_FIELD, PrimeField, field_from_descriptor
from .lgroup import LElement, WeightError

__all__ = [
    "DegenerateWindowWarning",
    "WeightedLineData",
    "DegreeWindow",
    "WindowedModule",
    "generator_names",
    "generator_degree",
    "structure_module",
    "validate",
    "twist_module",
    "apply_F",
    "apply_F_lambda",
    "apply_F_rho",
    "hom_dim_mod",
    "in_image_F",
    "multiplication_morphism",
    "degreewise_cokernel",
    "simple_cokernel_module",
    "direct_sum",
    "base_change",
    "random_module",
    "modules_equal_on_common",
    "to_json_dict",
    "from_json_dict",
]


class DegenerateWindowWarning(UserWarning):
    """The window is too small for any generator action to be defined."""


@dataclass(frozen=True)
class WeightedLineData:
    """Weight sequence, marked points of the projective line, base field.

    Points are rational, given by homogeneous coordinate pairs; they
    must be pairwise distinct as field elements (cross-ratio test).
    """

    p: tuple[int, ...]
    points: tuple[tuple[int, int], ...]
    field: object = DEFAULT_FIELD

    def __post_init__(self):
        object.__setattr__(self, "p", lgroup.check_weights(self.p))
        object.__setattr__(
            self, "points", tuple((int(a), int(b)) for a, b in self.points)
        )
        if len(self.points) != len(self.p):
            raise WeightError(
                f"{len(self.points)} points for {len(self.p)} weights"
            )
        f = self.field
        coords = [(f.element(a), f.element(b)) for a, b in self.points]
        zero = f.element(0)
        for a, b in coords:
            if a == zero and b == zero:
                raise WeightError("[0:0] is not a point of the projective line")
        for i in range(len(coords)):
            for j in range(i + 1, len(coords)):
                a, b = coords[i]
                c, d = coords[j]
                if f.element(a * d - b * c) == zero:
                    raise WeightError(
                        f"points {i + 1} and {j + 1} are not distinct"
                    )


@dataclass(frozen=True)
class DegreeWindow:
    """All normal-form degrees with 0 <= c-coefficient <= bound."""

    p: tuple[int, ...]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "p", lgroup.check_weights(self.p))
        if self.bound < 0:
            raise WeightError("window bound must be >= 0")

    def contains(self, l: LElement) -> bool:
        return l.p == self.p and 0 <= l.c <= self.bound

    def degrees(self) -> list[LElement]:
        coeff_ranges = [range(q) for q in self.p]
        out = []
        for c in range(self.bound + 1):
            block = [
                LElement(self.p, coeffs, c)
                for coeffs in _cartesian(coeff_ranges)
            ]
            block.sort(key=lambda l: l.sort_key)
            out.extend(block)
        return out


def _cartesian(ranges):
    if not ranges:
        return [()]
    rest = _cartesian(ranges[1:])
    return [(x,) + tail for x in ranges[0] for tail in rest]


def generator_names(p) -> list[str]:
    return ["u", "v"] + [f"x{i}" for i in range(1, len(p) + 1)]


def generator_degree(p, gen: str) -> LElement:
    if gen in ("u", "v"):
        return lgroup.c_gen(p)
    if gen.startswith("x"):
        return lgroup.x_gen(p, int(gen[1:]))
    raise WeightError(f"unknown generator {gen!r}")


class WindowedModule:
    """A graded module truncated to a degree window.

    dims maps defined degrees to dimensions; actions[gen][l] is the
    matrix of gen from the component at l to the one at l + deg(gen),
    stored only where both endpoints are defined and inside the window.
    """

    def __init__(self, data: WeightedLineData, window: DegreeWindow,
                 dims: dict, actions: dict):
        if window.p != data.p:
            raise WeightError("window and data weight sequences differ")
        self.data = data
        self.window = window
        self.dims = dict(dims)
        self.actions = {g: dict(m) for g, m in actions.items()}
        for g in generator_names(data.p):
            self.actions.setdefault(g, {})

    @property
    def field(self):
        return self.data.field

    @property
    def domain(self):
        return self.dims.keys()

    def dim(self, l: LElement) -> int:
        return self.dims.get(l, 0)

    def action(self, gen: str, l: LElement):
        return self.actions.get(gen, {}).get(l)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims.values())

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def copy(self) -> "WindowedModule":
        return WindowedModule(self.data, self.window, self.dims, self.actions)


def mult_matrix(data: WeightedLineData, gen: str, a: LElement):
    """Matrix of multiplication by gen between ring components.

    The component at a normal-form degree with c-coefficient c has the
    monomial basis u^(c-b) v^b x^coeffs, b = 0..c.  Multiplication by u
    or v is the evident index map; x_i is the identity unless the i-th
    coefficient wraps, in which case the defining relation
    x_i^{p_i} = lam_{i0} v - lam_{i1} u is substituted.
    """
    f = data.field
    dg = generator_degree(data.p, gen)
    t = lgroup.add(a, dg)
    sdim = max(0, a.c + 1)
    tdim = max(0, t.c + 1)
    m = f.zeros(tdim, sdim)
    if sdim == 0 or tdim == 0:
        return m
    if gen == "u":
        for b in range(sdim):
            m[b, b] = f.element(1)
        return m
    if gen == "v":
        for b in range(sdim):
            m[b + 1, b] = f.element(1)
        return m
    i = int(gen[1:])
    if a.coeffs[i - 1] < data.p[i - 1] - 1:
        return f.eye(sdim)
    lam0, lam1 = data.points[i - 1]
    for b in range(sdim):
        m[b, b] = f.element(-lam1)
        m[b + 1, b] = f.element(lam0)
    return m


def structure_module(data: WeightedLineData, twist: LElement,
                     window: DegreeWindow) -> WindowedModule:
    """The free module of rank one, twisted, truncated to the window."""
    if twist.p != data.p:
        raise WeightError("twist over a different weight sequence")
    dims = {}
    for l in window.degrees():
        dims[l] = max(0, lgroup.add(l, twist).c + 1)
    actions = {g: {} for g in generator_names(data.p)}
    for g in generator_names(data.p):
        dg = generator_degree(data.p, g)
        for l in dims:
            if window.contains(lgroup.add(l, dg)):
                actions[g][l] = mult_matrix(data, g, lgroup.add(l, twist))
    m = WindowedModule(data, window, dims, actions)
    if all(not acts for acts in m.actions.values()) and m.total_dim() > 0:
        warnings.warn(
            "window too small for any generator action",
            DegenerateWindowWarning,
        )
    return m


def validate(m: WindowedModule) -> list[str]:
    """All violated shape, commutativity and defining-relation constraints.

    Empty report means valid.  Only composites whose every factor is
    defined inside the window are checked.
    """
    problems = []
    f = m.field
    p = m.data.p
    gens = generator_names(p)
    degs = {g: generator_degree(p, g) for g in gens}

    shaped = set()
    for g in gens:
        for l, mat in m.actions[g].items():
            tgt = lgroup.add(l, degs[g])
            if l not in m.dims or tgt not in m.dims:
                problems.append(f"action {g} at {l} touches an undefined degree")
                continue
            want = (m.dims[tgt], m.dims[l])
            if mat.shape != want:
                problems.append(
                    f"action {g} at {l} has shape {mat.shape}, expected {want}"
                )
            else:
                shaped.add((g, l))

    def act(g, l):
        return m.action(g, l) if (g, l) in shaped else None

    for gi in range(len(gens)):
        for hi in range(gi + 1, len(gens)):
            g, h = gens[gi], gens[hi]
            dg, dh = degs[g], degs[h]
            for l in m.dims:
                g_l = act(g, l)
                h_l = act(h, l)
                g_after = act(g, lgroup.add(l, dh))
                h_after = act(h, lgroup.add(l, dg))
                if any(m is None for m in (g_l, h_l, g_after, h_after)):
                    continue
                left = f.matmul(g_after, h_l)
                right = f.matmul(h_after, g_l)
                if not f.equal(left, right):
                    problems.append(f"generators {g},{h} fail to commute at {l}")

    for i in range(1, len(p) + 1):
        g = f"x{i}"
        lam0, lam1 = m.data.points[i - 1]
        for l in m.dims:
            u_l = act("u", l)
            v_l = act("v", l)
            if u_l is None or v_l is None:
                continue
            comp = f.eye(m.dims[l])
            cur = l
            ok = True
            for _ in range(p[i - 1]):
                step = act(g, cur)
                if step is None:
                    ok = False
                    break
                comp = f.matmul(step, comp)
                cur = lgroup.add(cur, degs[g])
            if not ok:
                continue
            rhs = f.sub(f.scale(lam0, v_l), f.scale(lam1, u_l))
            if not f.equal(comp, rhs):
                problems.append(
                    f"relation x{i}^{p[i - 1]} = lam0*v - lam1*u fails at {l}"
                )
    return problems


def twist_module(m: WindowedModule, x: LElement) -> WindowedModule:
    """Degree shift: the new component at l is the old one at l + x."""
    if x.p != m.data.p:
        raise WeightError("twist over a different weight sequence")
    dims = {}
    for l in m.window.degrees():
        src = lgroup.add(l, x)
        if src in m.dims:
            dims[l] = m.dims[src]
    actions = {g: {} for g in generator_names(m.data.p)}
    for g in generator_names(m.data.p):
        dg = generator_degree(m.data.p, g)
        for l in dims:
            if lgroup.add(l, dg) not in dims:
                continue
            mat = m.action(g, lgroup.add(l, x))
            if mat is not None:
                actions[g][l] = mat
    return WindowedModule(m.data, m.window, dims, actions)


def _reduced_data(data: WeightedLineData, j: int) -> WeightedLineData:
    if not 1 <= j <= len(data.p):
        raise WeightError(f"index {j} outside 1..{len(data.p)}")
    if data.p[j - 1] < 2:
        raise WeightError(f"invalid reduction index {j}: weight is 1")
    small = list(data.p)
    small[j - 1] -= 1
    return dataclasses.replace(data, p=tuple(small))


def _enlarged_data(data: WeightedLineData, j: int) -> WeightedLineData:
    if not 1 <= j <= len(data.p):
        raise WeightError(f"index {j} outside 1..{len(data.p)}")
    big = list(data.p)
    big[j - 1] += 1
    return dataclasses.replace(data, p=tuple(big))


def apply_F(m: WindowedModule, j: int) -> WindowedModule:
    """Inclusion direction: from weights p' to p with p_j = p'_j + 1.

    The component at l is the source component at the coefficient-copy
    preimage of l (of l - x_j when the j-th coefficient is positive);
    x_j acts as the identity out of degrees with j-th coefficient 0 and
    is inherited elsewhere.
    """
    big = _enlarged_data(m.data, j)
    window = DegreeWindow(big.p, m.window.bound)
    xj = lgroup.x_gen(big.p, j)
    f = big.field

    def src(l: LElement) -> LElement:
        if l.coeffs[j - 1] == 0:
            return lgroup.phi_preimage(l, j)
        return lgroup.phi_preimage(lgroup.add(l, lgroup.negate(xj)), j)

    dims = {}
    for l in window.degrees():
        s = src(l)
        if s in m.dims:
            dims[l] = m.dims[s]
    actions = {g: {} for g in generator_names(big.p)}
    for g in generator_names(big.p):
        dg = generator_degree(big.p, g)
        for l in dims:
            tgt = lgroup.add(l, dg)
            if tgt not in dims:
                continue
            if g == f"x{j}":
                if l.coeffs[j - 1] == 0:
                    actions[g][l] = f.eye(dims[l])
                else:
                    mat = m.action(g, src(l))
                    if mat is not None:
                        actions[g][l] = mat
            else:
                mat = m.action(g, src(l))
                if mat is not None:
                    actions[g][l] = mat
    out = WindowedModule(big, window, dims, actions)
    if all(not acts for acts in out.actions.values()) and out.total_dim() > 0:
        warnings.warn(
            "window too small for any generator action",
            DegenerateWindowWarning,
        )
    return out


def apply_F_lambda(n: WindowedModule, j: int) -> WindowedModule:
    """Left adjoint: the component at l is the source one at phi(l) + x_j.

    x_j acts by a single inherited step except at the top coefficient
    p_j - 2, where it acts as the inherited x_j squared.
    """
    small = _reduced_data(n.data, j)
    window = DegreeWindow(small.p, n.window.bound)
    xj_big = lgroup.x_gen(n.data.p, j)
    gname = f"x{j}"

    def src(l: LElement) -> LElement:
        return lgroup.add(lgroup.phi(l, n.data.p, j), xj_big)

    dims = {}
    for l in window.degrees():
        s = src(l)
        if s in n.dims:
            dims[l] = n.dims[s]
    actions = {g: {} for g in generator_names(small.p)}
    for g in generator_names(small.p):
        dg = generator_degree(small.p, g)
        for l in dims:
            if lgroup.add(l, dg) not in dims:
                continue
            if g == gname and l.coeffs[j - 1] == small.p[j - 1] - 1:
                first = n.action(gname, src(l))
                second = n.action(gname, lgroup.add(src(l), xj_big))
                if first is not None and second is not None:
                    actions[g][l] = n.field.matmul(second, first)
            else:
                mat = n.action(g, src(l))
                if mat is not None:
                    actions[g][l] = mat
    return WindowedModule(small, window, dims, actions)


def apply_F_rho(n: WindowedModule, j: int) -> WindowedModule:
    """Right adjoint: reads phi(l) at j-th coefficient 0, phi(l) + x_j else.

    x_j acts as the inherited x_j squared out of coefficient 0 and by a
    single step elsewhere.
    """
    small = _reduced_data(n.data, j)
    window = DegreeWindow(small.p, n.window.bound)
    xj_big = lgroup.x_gen(n.data.p, j)
    gname = f"x{j}"

    def src(l: LElement) -> LElement:
        base = lgroup.phi(l, n.data.p, j)
        if l.coeffs[j - 1] == 0:
            return base
        return lgroup.add(base, xj_big)

    dims = {}
    for l in window.degrees():
        s = src(l)
        if s in n.dims:
            dims[l] = n.dims[s]
    actions = {g: {} for g in generator_names(small.p)}
    for g in generator_names(small.p):
        dg = generator_degree(small.p, g)
        for l in dims:
            if lgroup.add(l, dg) not in dims:
                continue
            if g == gname and l.coeffs[j - 1] == 0:
                first = n.action(gname, src(l))
                second = n.action(gname, lgroup.add(src(l), xj_big))
                if first is not None and second is not None:
                    actions[g][l] = n.field.matmul(second, first)
            else:
                mat = n.action(g, src(l))
                if mat is not None:
                    actions[g][l] = mat
    return WindowedModule(small, window, dims, actions)


def hom_dim_mod(a: WindowedModule, b: WindowedModule) -> int:
    """Dimension of the space of degree-preserving intertwiners.

    One unknown block per common degree, one linear constraint per
    generator action defined on both sides.
    """
    if a.data != b.data or a.window != b.window:
        raise WeightError("modules over different data or windows")
    f = a.field
    common = sorted(set(a.dims) & set(b.dims), key=lambda l: l.sort_key)
    sizes = {l: b.dims[l] * a.dims[l] for l in common}
    total = sum(sizes.values())
    if total == 0:
        return 0
    offsets = {}
    acc = 0
    for l in common:
        offsets[l] = acc
        acc += sizes[l]

    blocks = []
    for g in generator_names(a.data.p):
        dg = generator_degree(a.data.p, g)
        for l in common:
            tgt = lgroup.add(l, dg)
            if tgt not in offsets:
                continue
            amat = a.action(g, l)
            bmat = b.action(g, l)
            if amat is None or bmat is None:
                continue
            rows = b.dims[tgt] * a.dims[l]
            if rows == 0:
                continue
            row = f.zeros(rows, total)
            if sizes[tgt]:
                row[:, offsets[tgt] : offsets[tgt] + sizes[tgt]] = f.kron(
                    amat.T, f.eye(b.dims[tgt])
                )
            if sizes[l]:
                row[:, offsets[l] : offsets[l] + sizes[l]] = f.sub(
                    row[:, offsets[l] : offsets[l] + sizes[l]],
                    f.kron(f.eye(a.dims[l]), bmat),
                )
            if not f.is_zero(row):
                blocks.append(row)
    if not blocks:
        return total
    return total - f.rank(np.vstack(blocks))


def in_image_F(n: WindowedModule, j: int) -> bool:
    """Image test: x_j must be an isomorphism out of every degree with
    j-th coefficient 0, wherever the action is defined in the window."""
    if not 1 <= j <= len(n.data.p):
        raise WeightError(f"index {j} outside 1..{len(n.data.p)}")
    xj = lgroup.x_gen(n.data.p, j)
    f = n.field
    for l in n.dims:
        if l.coeffs[j - 1] != 0:
            continue
        mat = n.action(f"x{j}", l)
        if mat is None:
            continue
        tgt = lgroup.add(l, xj)
        if n.dims[l] != n.dims.get(tgt) or not f.is_invertible(mat):
            return False
    return True


def multiplication_morphism(data: WeightedLineData, window: DegreeWindow,
                            gen: str, twist: LElement | None = None):
    """The multiplication map by gen between twisted structure modules.

    Returns (domain, codomain, components); the domain is twisted down
    by deg(gen), and the component at l is the ring multiplication
    matrix, so the triple is a degree-preserving morphism.
    """
    if twist is None:
        twist = lgroup.zero(data.p)
    dg = generator_degree(data.p, gen)
    dom = structure_module(data, lgroup.add(twist, lgroup.negate(dg)), window)
    cod = structure_module(data, twist, window)
    comp = {}
    for l in window.degrees():
        comp[l] = mult_matrix(
            data, gen, lgroup.add(lgroup.add(l, twist), lgroup.negate(dg))
        )
    return dom, cod, comp


def _column_extension(f, mat):
    """(M, r): invertible M whose first r columns span the column space."""
    d = mat.shape[0]
    cols = []
    r = 0
    for c in range(mat.shape[1]):
        cand = cols + [mat[:, c]]
        stacked = np.column_stack(cand) if cand else f.zeros(d, 0)
        if f.rank(stacked) > r:
            cols = cand
            r += 1
    for i in range(d):
        if len(cols) == d:
            break
        e = f.zeros(d, 1)[:, 0]
        e[i] = f.element(1)
        cand = cols + [e]
        if f.rank(np.column_stack(cand)) > len(cols):
            cols = cand
    m = np.column_stack(cols) if cols else f.zeros(d, 0)
    return m, r


def degreewise_cokernel(dom: WindowedModule, cod: WindowedModule,
                        comp: dict) -> WindowedModule:
    """Quotient of the codomain by the degree-wise image of a morphism.

    Induced generator actions are computed through a chosen section and
    checked to be well defined (the morphism must intertwine actions).
    """
    if dom.data != cod.data or dom.window != cod.window:
        raise WeightError("morphism endpoints over different data or windows")
    f = cod.field
    qmaps = {}
    sections = {}
    dims = {}
    for l in cod.dims:
        mat = comp.get(l)
        d = cod.dims[l]
        if mat is None:
            continue
        ext, r = _column_extension(f, mat)
        dims[l] = d - r
        if d:
            inv = f.inverse(ext)
            qmaps[l] = inv[r:, :]
            sections[l] = ext[:, r:]
        else:
            qmaps[l] = f.zeros(0, 0)
            sections[l] = f.zeros(0, 0)

    actions = {g: {} for g in generator_names(cod.data.p)}
    for g in generator_names(cod.data.p):
        dg = generator_degree(cod.data.p, g)
        for l in dims:
            tgt = lgroup.add(l, dg)
            if tgt not in dims:
                continue
            gmat = cod.action(g, l)
            if gmat is None:
                continue
            pushed = f.matmul(qmaps[tgt], f.matmul(gmat, comp[l]))
            if not f.is_zero(pushed):
                raise WeightError(
                    f"components do not form a morphism: {g} at {l}"
                )
            actions[g][l] = f.matmul(qmaps[tgt], f.matmul(gmat, sections[l]))
    return WindowedModule(cod.data, cod.window, dims, actions)


def simple_cokernel_module(data: WeightedLineData, window: DegreeWindow,
                           j: int) -> WindowedModule:
    """The windowed cokernel of multiplication by x_j on the free module."""
    dom, cod, comp = multiplication_morphism(data, window, f"x{j}")
    return degreewise_cokernel(dom, cod, comp)


def direct_sum(a: WindowedModule, b: WindowedModule) -> WindowedModule:
    """Block-diagonal direct sum on the common domain."""
    if a.data != b.data or a.window != b.window:
        raise WeightError("summands over different data or windows")
    f = a.field
    dims = {
        l: a.dims[l] + b.dims[l] for l in set(a.dims) & set(b.dims)
    }
    actions = {g: {} for g in generator_names(a.data.p)}
    for g in generator_names(a.data.p):
        dg = generator_degree(a.data.p, g)
        for l in dims:
            tgt = lgroup.add(l, dg)
            if tgt not in dims:
                continue
            am = a.action(g, l)
            bm = b.action(g, l)
            if am is None or bm is None:
                continue
            blk = f.zeros(dims[tgt], dims[l])
            blk[: am.shape[0], : am.shape[1]] = am
            blk[am.shape[0] :, am.shape[1] :] = bm
            actions[g][l] = blk
    return WindowedModule(a.data, a.window, dims, actions)


def base_change(m: WindowedModule, rng) -> WindowedModule:
    """Conjugate by a random invertible matrix at every degree."""
    f = m.field
    basis = {l: f.random_invertible(d, rng) for l, d in m.dims.items()}
    inv = {l: f.inverse(b) if b.shape[0] else b for l, b in basis.items()}
    actions = {g: {} for g in generator_names(m.data.p)}
    for g in generator_names(m.data.p):
        dg = generator_degree(m.data.p, g)
        for l, mat in m.actions[g].items():
            tgt = lgroup.add(l, dg)
            actions[g][l] = f.matmul(basis[tgt], f.matmul(mat, inv[l]))
    return WindowedModule(m.data, m.window, m.dims, actions)


def random_module(data: WeightedLineData, window: DegreeWindow, rng,
                  max_summands: int = 3) -> WindowedModule:
    """Seeded random valid module: twisted free summands in random bases."""
    if not isinstance(data.field, PrimeField):
        raise WeightError("random modules require a prime field")
    k = int(rng.integers(1, max_summands + 1))
    total = None
    for _ in range(k):
        coeffs = [int(rng.integers(0, q)) for q in data.p]
        c = int(rng.integers(-1, max(1, window.bound)))
        twist = lgroup.normalize(coeffs, c, data.p)
        summand = structure_module(data, twist, window)
        total = summand if total is None else direct_sum(total, summand)
    return base_change(total, rng)


def modules_equal_on_common(a: WindowedModule, b: WindowedModule):
    """(number of common degrees, list of mismatches on them).

    Dimensions are compared on every common degree, matrices wherever
    both modules define the action.
    """
    mismatches = []
    common = sorted(set(a.dims) & set(b.dims), key=lambda l: l.sort_key)
    f = a.field
    for l in common:
        if a.dims[l] != b.dims[l]:
            mismatches.append(f"dim at {l}: {a.dims[l]} != {b.dims[l]}")
    for g in generator_names(a.data.p):
        for l in common:
            am = a.action(g, l)
            bm = b.action(g, l)
            if am is None or bm is None:
                continue
            if am.shape != bm.shape or not f.equal(am, bm):
                mismatches.append(f"action {g} at {l} differs")
    return len(common), mismatches


def to_json_dict(m: WindowedModule) -> dict:
    f = m.field
    return {
        "p": list(m.data.p),
        "points": [list(pt) for pt in m.data.points],
        "field": repr(f),
        "N": m.window.bound,
        "dims": {l.key(): d for l, d in sorted(
            m.dims.items(), key=lambda kv: kv[0].sort_key)},
        "actions": {
            g: {
                l.key(): f.to_lists(mat)
                for l, mat in sorted(acts.items(), key=lambda kv: kv[0].sort_key)
            }
            for g, acts in m.actions.items()
        },
    }


def from_json_dict(d: dict) -> WindowedModule:
    field_obj = field_from_descriptor(d["field"])
    data = WeightedLineData(
        tuple(d["p"]), tuple(tuple(pt) for pt in d["points"]), field_obj
    )
    window = DegreeWindow(data.p, d["N"])
    dims = {lgroup.parse_key(k, data.p): v for k, v in d["dims"].items()}
    actions = {}
    for g, acts in d["actions"].items():
        dg = generator_degree(data.p, g)
        actions[g] = {}
        for k, rows in acts.items():
            l = lgroup.parse_key(k, data.p)
            tgt = lgroup.add(l, dg)
            shape = (dims.get(tgt, 0), dims.get(l, 0))
            actions[g][l] = field_obj.from_lists(rows, shape)
    return WindowedModule(data, window, dims, actions)
