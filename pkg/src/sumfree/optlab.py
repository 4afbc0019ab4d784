"""Exponent optimization for the two-AP counting argument.

The objective is the per-unit exponent

    h/l = (x H(1/x) - 2x/(1+d)) + (y H(1/y) - 2y/(1+d)) q + 2 y q (H(z) - z)

over the domain D = {x >= 1, 0 <= q <= 2x, y >= 1, 0 <= z <= 1}, where
q = p/l and d is an explicit slack coefficient (0 is the normative case).
Since h is linear in q, the optimum sits at q = 0 or q = 2x, and the rest
decomposes into two closed-form one-dimensional problems:

    f(z) = H(z) - z          maximal at z = 1/3 with value log2(3) - 1;
    g(t) = t H(1/t) - rho t  maximal at t = 2^rho/(2^rho - 1)
                             with value -log2(2^rho - 1).

At d = 0 this yields the optimum (x, q, y, z) = (196/115, 2x, 16/7, 1/3)
with value log2(81/115) ~ -0.50587.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .counting import entropy

DOMAIN_TOL = 1e-12


def _check_domain(x: float, q: float, y: float, z: float) -> None:
    if x < 1 - DOMAIN_TOL or y < 1 - DOMAIN_TOL:
        raise ValueError("x and y must be at least 1")
    if not -DOMAIN_TOL <= q <= 2 * x + DOMAIN_TOL:
        raise ValueError("p/l must lie in [0, 2x]")
    if not -DOMAIN_TOL <= z <= 1 + DOMAIN_TOL:
        raise ValueError("z must lie in [0, 1]")


def evaluate_h(x: float, p_over_ell: float, y: float, z: float,
               delta: float = 0.0) -> float:
    """The exponent h divided by l, with the O(delta) term set to zero."""
    _check_domain(x, p_over_ell, y, z)
    q = p_over_ell
    base = x * entropy(1 / x) - 2 * x / (1 + delta)
    linear = y * entropy(1 / y) - 2 * y / (1 + delta)
    return base + linear * q + 2 * y * q * (entropy(z) - z)


def _grid_refine_max(fn, lo: float, hi: float, points: int = 400,
                     rounds: int = 5) -> tuple[float, float]:
    """Deterministic dense grid with repeated 10x local refinement."""
    best_t, best_v = lo, fn(lo)
    for _ in range(rounds):
        step = (hi - lo) / (points - 1)
        for i in range(points):
            t = lo + i * step
            v = fn(t)
            if v > best_v:
                best_t, best_v = t, v
        lo = max(lo, best_t - step)
        hi = min(hi, best_t + step)
    return best_t, best_v


def maximize_f() -> tuple[float, float]:
    """Maximum of f(z) = H(z) - z: closed form z* = 1/3, f* = log2(3) - 1."""
    z_star = 1 / 3
    value = math.log2(3) - 1
    search_z, search_v = _grid_refine_max(lambda z: entropy(z) - z, 0.0, 1.0)
    assert abs(search_v - value) < 1e-10 and abs(search_z - z_star) < 1e-6
    return z_star, value


def maximize_g(rho: float) -> tuple[float, float]:
    """Maximum of g(t) = t H(1/t) - rho t over t >= 1.

    Closed form t* = 2^rho/(2^rho - 1), g(t*) = -log2(2^rho - 1).
    """
    if rho <= 0:
        raise ValueError("rho must be positive")
    pow_rho = 2.0 ** rho
    t_star = pow_rho / (pow_rho - 1)
    value = -math.log2(pow_rho - 1)
    g = lambda t: t * entropy(1 / t) - rho * t
    search_t, search_v = _grid_refine_max(g, 1.0, max(4.0, 2 * t_star))
    assert abs(search_v - value) < 1e-8
    return t_star, value


@dataclass(frozen=True)
class OptimumReport:
    argmax: dict = field(hash=False)  # keys x, p_over_ell, y, z
    max_value_per_ell: float = 0.0
    delta: float = 0.0
    method: str = "closed-form"
    tolerance: float = 1e-6
    cross_check: dict = field(default_factory=dict, hash=False)


def maximize_h(delta: float = 0.0, tolerance: float = 1e-6) -> OptimumReport:
    """Global maximum of h/l over D, by backward decomposition.

    Optimize z first (f), then y (g with rho_y = 2/(1+d) - 2 f*), then pick
    the q-boundary from the sign of the linear coefficient, then x (g with
    rho_x folding in the optimal coefficient).  A dense grid + refinement
    pass over the same decomposition cross-checks the closed forms.
    """
    if not 0 <= delta <= 0.01:
        raise ValueError("delta must lie in [0, 0.01]")
    rho_base = 2 / (1 + delta)
    z_star, f_star = maximize_f()
    rho_y = rho_base - 2 * f_star
    y_star, g_max = maximize_g(rho_y)
    if g_max > 0:
        # the q-coefficient is positive at (y*, z*): q sits at 2x
        rho_x = rho_base - 2 * g_max
        x_star, value = maximize_g(rho_x)
        q_star = 2 * x_star
    else:
        x_star, value = maximize_g(rho_base)
        q_star, y_star, z_star = 0.0, 1.0, z_star
    # independent grid + refine over the same decomposition
    inner = lambda y, z: (y * entropy(1 / y) - rho_base * y
                          + 2 * y * (entropy(z) - z))
    gz, _ = _grid_refine_max(lambda z: entropy(z) - z, 0.0, 1.0)
    gy, g_inner = _grid_refine_max(lambda y: inner(y, gz), 1.0, 8.0)
    coeff = max(g_inner, 0.0)  # q = 0 whenever the coefficient is negative
    gx, g_value = _grid_refine_max(
        lambda x: x * entropy(1 / x) - rho_base * x + 2 * x * coeff, 1.0, 8.0)
    cross = {"x": gx, "y": gy, "z": gz, "value": g_value,
             "value_gap": abs(g_value - value)}
    assert abs(g_value - value) < tolerance
    argmax = {"x": x_star, "p_over_ell": q_star, "y": y_star, "z": z_star}
    assert abs(evaluate_h(**argmax, delta=delta) - value) < tolerance
    return OptimumReport(argmax, value, delta, "closed-form+grid", tolerance,
                         cross)


@dataclass(frozen=True)
class GradientReport:
    partial_y: float
    partial_z: float
    boundary_partial_x: float  # d/dx of h(x, 2x, y*, z*): the feasible x-axis
    partial_q: float  # >= 0 certifies q = 2x is a true boundary maximum

    @property
    def stationary(self) -> bool:
        return (max(abs(self.partial_y), abs(self.partial_z),
                    abs(self.boundary_partial_x)) < 1e-4
                and self.partial_q >= -1e-9)


def gradient_check(delta: float = 0.0, step: float = 1e-6) -> GradientReport:
    """Central finite differences of h/l at the reported optimum.

    y and z are interior coordinates, so their partials must vanish.  q sits
    on the boundary q = 2x; moving along that boundary is the feasible
    x-direction, so the derivative of x -> h(x, 2x, y*, z*) must vanish,
    while the q-partial itself must be non-negative (pointing out of D).
    """
    opt = maximize_h(delta)
    x, q, y, z = (opt.argmax[k] for k in ("x", "p_over_ell", "y", "z"))
    d = delta
    dy = (evaluate_h(x, q, y + step, z, d)
          - evaluate_h(x, q, y - step, z, d)) / (2 * step)
    dz = (evaluate_h(x, q, y, z + step, d)
          - evaluate_h(x, q, y, z - step, d)) / (2 * step)
    dxb = (evaluate_h(x + step, 2 * (x + step), y, z, d)
           - evaluate_h(x - step, 2 * (x - step), y, z, d)) / (2 * step)
    dq = (evaluate_h(x, q, y, z, d)
          - evaluate_h(x, q - step, y, z, d)) / step
    return GradientReport(dy, dz, dxb, dq)
