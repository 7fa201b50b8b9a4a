"""Executable identity suites, shared by the CLI and the tests.

Every case is exact: an integer or matrix equality with no tolerance.
The suites run bounded enumerations sized for interactive use; the
acceptance tests run the full stated ranges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import expansion, extquiver, gradedmod, lgroup, planner, tubecat
from .expansion import ExpansionContext
from .gradedmod import DegreeWindow, WeightedLineData
from .tubecat import PointDescriptor, TubeObject

__all__ = ["CheckCase", "SUITE_NAMES", "run_suite"]

SUITE_NAMES = ("adjunction", "ar", "quiver", "graded")


@dataclass(frozen=True)
class CheckCase:
    group: str
    name: str
    passed: bool
    detail: str


def _pairs(point: PointDescriptor, max_each: int):
    indecs = tubecat.indecomposables(point, max_each)
    for u in indecs:
        for v in indecs:
            yield TubeObject.of(point, (u,)), TubeObject.of(point, (v,))


def suite_ar(data: WeightedLineData, max_length: int = 6) -> list[CheckCase]:
    """Translate-based Ext against Hom, per exceptional tube."""
    cases = []
    for j, p in enumerate(data.p, start=1):
        if p < 2:
            continue
        ctx = ExpansionContext.for_rank(p, label=str(j))
        lam, rho = ctx.s_lambda, ctx.s_rho
        bad = 0
        count = 0
        for u in tubecat.indecomposables(ctx.big_point, max_length):
            a = TubeObject.of(ctx.big_point, (u,))
            count += 1
            if tubecat.ext1_dim(a, rho) != tubecat.hom_dim(lam, a):
                bad += 1
            if tubecat.ext1_dim(lam, a) != tubecat.hom_dim(a, rho):
                bad += 1
        cases.append(CheckCase(
            "ar", f"ar_formula_point_{j}", bad == 0,
            f"indecomposables={count} violations={bad}"))
        conn_ok = tubecat.ext1_dim(lam, rho) == 1
        cases.append(CheckCase(
            "ar", f"connecting_ext_point_{j}", conn_ok,
            f"ext1(S_lambda,S_rho)={tubecat.ext1_dim(lam, rho)}"))
    return cases


def suite_adjunction(data: WeightedLineData, max_each: int = 4) -> list[CheckCase]:
    """Hom and Ext adjunction dimensions for contract/expand, per tube."""
    cases = []
    for j, p in enumerate(data.p, start=1):
        if p < 2:
            continue
        ctx = ExpansionContext.for_rank(p, label=str(j))
        bad = 0
        count = 0
        for ua in tubecat.indecomposables(ctx.big_point, max_each):
            a = TubeObject.of(ctx.big_point, (ua,))
            ca = expansion.contract(ctx, a)
            xa = expansion.coexpand(ctx, a)
            for ub in tubecat.indecomposables(ctx.small_point, max_each):
                b = TubeObject.of(ctx.small_point, (ub,))
                eb = expansion.expand(ctx, b)
                count += 1
                if tubecat.hom_dim(ca, b) != tubecat.hom_dim(a, eb):
                    bad += 1
                if tubecat.ext1_dim(ca, b) != tubecat.ext1_dim(a, eb):
                    bad += 1
                if tubecat.hom_dim(b, xa) != tubecat.hom_dim(eb, a):
                    bad += 1
                if tubecat.ext1_dim(b, xa) != tubecat.ext1_dim(eb, a):
                    bad += 1
        cases.append(CheckCase(
            "adjunction", f"adjunction_point_{j}", bad == 0,
            f"pairs={count} violations={bad}"))
    return cases


def suite_quiver(data: WeightedLineData) -> list[CheckCase]:
    """Contract the tube quiver and compare with the smaller tube."""
    cases = []
    for j, p in enumerate(data.p, start=1):
        if p < 2:
            continue
        big_point = PointDescriptor.exceptional(j, p)
        small_point = PointDescriptor.exceptional(j, p - 1)
        big_q = extquiver.quiver_of([big_point])
        small_q = extquiver.quiver_of([small_point])
        lam = extquiver.simple_label(big_point, 1)
        rho = extquiver.simple_label(big_point, p)
        bar = "merged"
        merged = extquiver.rewrite_contract(big_q, lam, rho, new_label=bar)
        relabel = {
            extquiver.simple_label(big_point, m):
                extquiver.simple_label(small_point, m - 1)
            for m in range(2, p)
        }
        relabel[bar] = extquiver.simple_label(small_point, p - 1)
        ok = merged.relabel(relabel) == small_q
        cases.append(CheckCase(
            "quiver", f"contract_matches_rank_{p}_point_{j}", ok,
            f"rank {p} -> {p - 1}"))
        back = extquiver.rewrite_expand(merged, bar, lam, rho)
        cases.append(CheckCase(
            "quiver", f"round_trip_point_{j}",
            back == big_q
            and extquiver.rewrite_contract(back, lam, rho, new_label=bar)
            == merged,
            "expand then contract"))
    return cases


def suite_graded(data: WeightedLineData, window_bound: int = 4,
                 seed: int = 0, samples: int = 8) -> list[CheckCase]:
    """Weight-change functor identities on a window."""
    cases = []
    j = None
    for i, p in enumerate(data.p, start=1):
        if p >= 2 and (j is None or p > data.p[j - 1]):
            j = i
    if j is None:
        return [CheckCase("graded", "no_reducible_weight", True,
                          "all weights are 1; nothing to check")]
    small_data = gradedmod._reduced_data(data, j)
    window = DegreeWindow(data.p, window_bound)
    small_window = DegreeWindow(small_data.p, window_bound)

    bad = 0
    count = 0
    for twist in small_window.degrees():
        o_small = gradedmod.structure_module(small_data, twist, small_window)
        lifted = gradedmod.apply_F(o_small, j)
        o_big = gradedmod.structure_module(
            data, lgroup.phi(twist, data.p, j), window)
        n, mism = gradedmod.modules_equal_on_common(lifted, o_big)
        count += 1
        if mism or n == 0:
            bad += 1
    cases.append(CheckCase(
        "graded", f"lift_of_free_module_j{j}", bad == 0,
        f"twists={count} violations={bad}"))

    rng = np.random.default_rng(seed)
    bad_l = bad_r = bad_tw = bad_img = 0
    for _ in range(samples):
        m = gradedmod.random_module(small_data, small_window, rng)
        fm = gradedmod.apply_F(m, j)
        back_l = gradedmod.apply_F_lambda(fm, j)
        back_r = gradedmod.apply_F_rho(fm, j)
        n, mism = gradedmod.modules_equal_on_common(back_l, m)
        if mism or n == 0:
            bad_l += 1
        n, mism = gradedmod.modules_equal_on_common(back_r, m)
        if mism or n == 0:
            bad_r += 1
        if not gradedmod.in_image_F(fm, j):
            bad_img += 1
        big = gradedmod.random_module(data, window, rng)
        xj = lgroup.x_gen(data.p, j)
        via_rho = gradedmod.apply_F_rho(big, j)
        via_lam = gradedmod.twist_module(
            gradedmod.apply_F_lambda(gradedmod.twist_module(big, xj), j),
            lgroup.negate(lgroup.x_gen(small_data.p, j)))
        n, mism = gradedmod.modules_equal_on_common(via_rho, via_lam)
        if mism or n == 0:
            bad_tw += 1
    cases.append(CheckCase(
        "graded", f"left_adjoint_retracts_j{j}", bad_l == 0,
        f"samples={samples} violations={bad_l}"))
    cases.append(CheckCase(
        "graded", f"right_adjoint_retracts_j{j}", bad_r == 0,
        f"samples={samples} violations={bad_r}"))
    cases.append(CheckCase(
        "graded", f"adjoints_twist_identity_j{j}", bad_tw == 0,
        f"samples={samples} violations={bad_tw}"))
    cases.append(CheckCase(
        "graded", f"lifted_modules_in_image_j{j}", bad_img == 0,
        f"samples={samples} violations={bad_img}"))

    cok = gradedmod.simple_cokernel_module(data, window, j)
    killed = gradedmod.apply_F_lambda(cok, j).is_zero()
    cases.append(CheckCase(
        "graded", f"cokernel_killed_j{j}", killed,
        "left adjoint annihilates the x_j cokernel"))
    return cases


def run_suite(name: str, data: WeightedLineData, window_bound: int = 4,
              seed: int = 0) -> list[CheckCase]:
    if name == "all":
        out = []
        for n in SUITE_NAMES:
            out.extend(run_suite(n, data, window_bound, seed))
        return out
    if name == "ar":
        return suite_ar(data)
    if name == "adjunction":
        return suite_adjunction(data)
    if name == "quiver":
        return suite_quiver(data)
    if name == "graded":
        return suite_graded(data, window_bound, seed)
    raise ValueError(f"unknown suite {name!r}")
