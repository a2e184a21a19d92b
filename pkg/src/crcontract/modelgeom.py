"""Geometry diagnostics for polynomial hypersurface models.

Weighted homogeneity, exact curve-membership certificates, the
weighted-leading (scaling-limit) part of a curve, and a bounded search for
monomial curves lying in a model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .hypersurface import HypersurfaceModel
from .polyring import ONE, ZERO, GaussRat, MonoKey, RealPoly, conj_poly, substitute


@dataclass(frozen=True)
class WeightVector:
    """Weights of the variables of rho, and the weight of the tangent real part."""

    r: Tuple[int, ...]
    target: int
    variables: Tuple[int, ...] = ()

    def full(self, n: int, tangent: int) -> Tuple[int, ...]:
        """Weights on all n ambient variables.

        The tangent coordinate gets ``target``.  Variables the model does not
        depend on are unconstrained by homogeneity; they also get ``target``.
        """
        out = [self.target] * n
        for v, w in zip(self.variables, self.r):
            out[v] = w
        out[tangent] = self.target
        return tuple(out)


class FormalCurve:
    """A polynomial curve t -> (phi_1(t), ..., phi_n(t)) through the origin."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Dict[int, GaussRat]]):
        comps = []
        for j, comp in enumerate(components):
            clean = {}
            for d, c in dict(comp).items():
                c = GaussRat.coerce(c)
                if d < 1:
                    raise ValueError(f"component {j + 1} has a term of degree {d}; curves must pass through 0")
                if c:
                    clean[int(d)] = c
            comps.append(dict(sorted(clean.items())))
        self.components = tuple(comps)

    @classmethod
    def monomial(cls, coeffs: Sequence, degrees: Sequence[int]) -> "FormalCurve":
        return cls([{d: c} if c else {} for c, d in zip(coeffs, degrees)])

    @property
    def n(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def degree(self) -> int:
        return max((max(c) for c in self.components if c), default=0)

    def vanishing_orders(self) -> Tuple[Optional[int], ...]:
        """Lowest degree per component; None stands for infinity (zero component)."""
        return tuple(min(c) if c else None for c in self.components)

    def as_polys(self) -> List[RealPoly]:
        return [RealPoly(1, {MonoKey((d,), (0,)): c for d, c in comp.items()}) for comp in self.components]

    def __eq__(self, other):
        if not isinstance(other, FormalCurve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(tuple(tuple(c.items()) for c in self.components))

    def __repr__(self):
        parts = []
        for comp in self.components:
            if not comp:
                parts.append("0")
            else:
                parts.append(" + ".join(f"{c}*t^{d}" for d, c in comp.items()))
        return "FormalCurve(" + ", ".join(parts) + ")"


def homogeneity_weights(M: HypersurfaceModel) -> Optional[WeightVector]:
    """Positive integer weights making rho weighted homogeneous of the tangent's weight.

    Solves sum_j r_j (I_j + I'_j) = target over every support monomial;
    returns the gcd-reduced solution, or None if no positive one exists.
    """
    keys = list(M.coefficients)
    if not keys:
        raise ValueError("zero defining polynomial has no weights")
    variables = tuple(sorted({j for k in keys for j in range(M.n) if k.hol[j] or k.antihol[j]}))
    nv = len(variables)
    rows = []
    for k in keys:
        rows.append([Fraction(k.hol[j] + k.antihol[j]) for j in variables] + [Fraction(-1)])
    kernel = linalg.nullspace(rows, nv + 1)
    if not kernel:
        return None
    if len(kernel) == 1:
        v = kernel[0]
        if v[-1] < 0:
            v = tuple(-x for x in v)
        if any(x <= 0 for x in v):
            return None
        den = reduce(lcm, (x.denominator for x in v), 1)
        ints = [int(x * den) for x in v]
        g = reduce(gcd, ints)
        ints = [x // g for x in ints]
        w = WeightVector(tuple(ints[:-1]), ints[-1], variables)
    else:
        w = _smallest_positive(rows, nv)
        if w is None:
            return None
        w = WeightVector(w[:-1], w[-1], variables)
    for k in keys:
        if sum(r * (k.hol[j] + k.antihol[j]) for r, j in zip(w.r, variables)) != w.target:
            raise AssertionError(f"weight certificate fails at {k}")
    return w


def _smallest_positive(rows, nv, tmax: int = 64) -> Optional[Tuple[int, ...]]:
    # kernel of dimension > 1: pick the positive solution with least target,
    # then lexicographically least weights
    for target in range(1, tmax + 1):
        for r in product(range(1, target + 1), repeat=nv):
            vec = list(r) + [target]
            if all(sum(a * x for a, x in zip(row, vec)) == 0 for row in rows):
                g = reduce(gcd, vec)
                if g == 1:
                    return tuple(vec)
    return None


def _default_order(M: HypersurfaceModel, phi: FormalCurve) -> int:
    mdeg = max((k.degree for k in M.coefficients), default=1)
    return max(mdeg, 1) * max(phi.degree(), 1)


def curve_membership(M: HypersurfaceModel, phi: FormalCurve, k: Optional[int] = None) -> RealPoly:
    """(z_t + conj z_t - rho) along phi, as a polynomial in t and conj(t), truncated at k.

    A zero residual certifies that the curve lies in the model.
    """
    if phi.n != M.n:
        raise ValueError(f"curve in C^{phi.n} but model lives in C^{M.n}")
    if k is None:
        k = _default_order(M, phi)
    hol = phi.as_polys()
    anti = [conj_poly(p) for p in hol]
    return substitute(M.defining_poly(), hol, anti, k)


def scaling_limit_curve(phi: FormalCurve, w) -> FormalCurve:
    """Keep, in each component, only the monomials of minimal weighted order d / r.

    ``w`` is a sequence of n positive weights.  Ties in the minimizing index
    are broken toward the smallest index; the kept monomials do not depend on
    that choice.
    """
    weights = tuple(w)
    if len(weights) != phi.n:
        raise ValueError(f"{len(weights)} weights for a curve in C^{phi.n}")
    if any(r <= 0 for r in weights):
        raise ValueError("weights must be positive")
    if phi.is_zero():
        raise ValueError("the zero curve has no scaling limit")
    orders = phi.vanishing_orders()
    ratios = [Fraction(d, r) if d is not None else None for d, r in zip(orders, weights)]
    best = min(x for x in ratios if x is not None)
    comps = []
    for comp, r in zip(phi.components, weights):
        comps.append({d: c for d, c in comp.items() if Fraction(d, r) == best})
    return FormalCurve(comps)


def minimizing_index(phi: FormalCurve, w) -> int:
    """1-based index attaining min d_l / r_l (smallest index on ties)."""
    orders = phi.vanishing_orders()
    ratios = [(Fraction(d, r), j) for j, (d, r) in enumerate(zip(orders, w), start=1) if d is not None]
    return min(ratios)[1]


DEFAULT_GRID = tuple(GaussRat(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if a or b)


def monomial_curve_search(M: HypersurfaceModel, dmax: int, grid: Sequence[GaussRat] = DEFAULT_GRID) -> List[FormalCurve]:
    """Bounded search for curves z_j = c_j t^(d_j) lying in M.

    The non-tangent variables that rho depends on get degrees in 1..dmax or
    are switched off; the first active coefficient is normalized to 1 (any
    other value is reached by reparametrizing t), the rest range over
    ``grid``.  The tangent coordinate is then forced: it must equal the
    holomorphic part of rho along the curve, and the mixed t^a conj(t)^b
    part must vanish.  Only curves whose forced tangent term is a single
    monomial of degree <= dmax are reported; for variables rho does not
    involve, the coordinate lines are reported.  Degree vectors with a
    common factor are skipped as reparametrizations.

    An empty result means no curve was found at this bound; it does not
    decide finite type.
    """
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    s, i = M.spectrum, M.tangent_index
    n = M.n
    t = s.tangent_variable(i)
    involved = [v for nu in range(1, i) for v in s.block_range(nu)]
    idle = [v for v in range(n) if v != t and v not in involved]
    rho = M.rho()
    weights = homogeneity_weights(M) if M.coefficients else None
    full = weights.full(n, t) if weights is not None else None
    found: List[FormalCurve] = []

    for degs in product(range(0, dmax + 1), repeat=len(involved)):
        active = [j for j, d in enumerate(degs) if d]
        if not active:
            continue
        if reduce(gcd, [degs[j] for j in active]) != 1:
            continue
        for rest in product(grid, repeat=len(active) - 1):
            coeffs = [ONE] + list(rest)
            comps: List[Dict[int, GaussRat]] = [dict() for _ in range(n)]
            for j, c in zip(active, coeffs):
                comps[involved[j]] = {degs[j]: c}
            trial = FormalCurve(comps)
            hol = trial.as_polys()
            along = substitute(rho, hol, [conj_poly(p) for p in hol], None)
            pure = {}
            mixed = False
            for key, c in along.terms.items():
                a, b = key.hol[0], key.antihol[0]
                if a and b:
                    mixed = True
                    break
                if a:
                    pure[a] = c
            if mixed:
                continue
            if len(pure) > 1:
                continue
            tangent_terms = {a: c for a, c in pure.items()}
            if any(a > dmax for a in tangent_terms):
                continue
            comps[t] = tangent_terms
            curve = FormalCurve(comps)
            if curve_membership(M, curve, None):
                raise AssertionError("curve search produced a curve outside the model")
            if full is not None and curve_membership(M, scaling_limit_curve(curve, full), None):
                raise AssertionError("scaling limit of a curve in a homogeneous model left the model")
            found.append(curve)

    for v in idle:
        comps = [dict() for _ in range(n)]
        comps[v] = {1: ONE}
        found.append(FormalCurve(comps))
    return found
