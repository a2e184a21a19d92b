"""Poincare-Dulac normalization of contraction jets with diagonal linear part."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .polyring import GaussRat, JetMap, RealPoly, block_degree, compose_jet
from .spectrum import Spectrum, degree_bound, is_resonant


class NormalFormError(ValueError):
    pass


@dataclass(frozen=True)
class NormalizationResult:
    normal_form: JetMap
    conjugator: JetMap
    order: int
    source: JetMap

    @property
    def residual_zero(self) -> bool:
        return not any(verify_conjugacy(self.source, self.conjugator, self.normal_form, self.order))


def _check_compatible(g: JetMap, s: Spectrum):
    if g.n != s.n:
        raise NormalFormError(f"jet on C^{g.n} but spectrum has {s.n} variables")
    if tuple(g.blocks) not in ((1,) * g.n, s.block_dims):
        raise NormalFormError(f"jet block layout {g.blocks} does not match spectrum {s.block_dims}")
    if g.linear != s.variable_eigenvalues():
        raise NormalFormError("jet linear part does not equal the spectrum's diagonal")


def _with_blocks(g: JetMap, s: Spectrum) -> JetMap:
    if g.blocks == s.block_dims:
        return g
    comps = [RealPoly(g.n, c.terms, s.block_dims) for c in g.components]
    return JetMap(comps, g.order)


def _monomial_resonant(s: Spectrum, var: int, hol) -> bool:
    nu = s.block_of(var)
    return is_resonant(s, nu, block_degree(hol, s.block_dims))


def centralizer_member(g: JetMap, s: Spectrum) -> bool:
    """True iff every nonlinear monomial of component j is resonant for j's block."""
    _check_compatible(g, s)
    for j in range(g.n):
        for key in g.nonlinear(j).terms:
            if not _monomial_resonant(s, j, key.hol):
                return False
    return True


def homological_step(f: JetMap, s: Spectrum, d: int) -> Tuple[JetMap, JetMap]:
    """Cancel every non-resonant degree-d monomial of f.

    Returns ``(f', h_d)`` with ``h_d = id + H_d`` and ``f' = h_d^-1 o f o h_d``
    truncated at f's order.  A monomial c z^I in component j is cancelled by
    the corrector coefficient c / (lambda^I - lambda_j).
    """
    _check_compatible(f, s)
    f = _with_blocks(f, s)
    n, k = f.n, f.order
    lam = s.variable_eigenvalues()
    correctors = []
    for j in range(n):
        terms = {}
        for key, c in f.components[j].homogeneous_part(d).terms.items():
            if _monomial_resonant(s, j, key.hol):
                continue
            lam_I = GaussRat(1)
            for v, e in enumerate(key.hol):
                if e:
                    lam_I = lam_I * lam[v] ** e
            terms[key] = c / (lam_I - lam[j])
        correctors.append(RealPoly(n, terms, s.block_dims))
    ident = [RealPoly.var(n, j, blocks=s.block_dims) for j in range(n)]
    h = JetMap([ident[j] + correctors[j] for j in range(n)], k)
    if not any(correctors):
        return f, h
    f_new = compose_jet(h.inverse(k), compose_jet(f, h, k), k)
    return f_new, h


def normalize(f: JetMap, s: Spectrum, k: Optional[int] = None) -> NormalizationResult:
    """Remove all non-resonant terms through degree k and certify the conjugacy."""
    _check_compatible(f, s)
    if k is None:
        k = max(degree_bound(s), 2)
    f = _with_blocks(f, s).with_order(k)
    g = f
    h = JetMap.identity(f.n, k, s.block_dims)
    for d in range(2, k + 1):
        g, hd = homological_step(g, s, d)
        h = compose_jet(h, hd, k)
    if any(verify_conjugacy(f, h, g, k)):
        raise AssertionError("normalization residual is nonzero")
    if not centralizer_member(g, s):
        raise AssertionError("normal form contains non-resonant terms")
    return NormalizationResult(g, h, k, f)


def verify_conjugacy(f: JetMap, h: JetMap, g: JetMap, k: Optional[int] = None) -> Tuple[RealPoly, ...]:
    """Componentwise f o h - h o g truncated at degree k (all zero iff conjugate)."""
    if not f.n == h.n == g.n:
        raise NormalFormError("dimension mismatch")
    if k is None:
        k = min(f.order, h.order, g.order)
    if any(not lam for lam in h.linear):
        raise NormalFormError("conjugator has a singular linear part")
    lhs = compose_jet(f, h, k)
    rhs = compose_jet(h, g, k)
    return tuple(a - b for a, b in zip(lhs.components, rhs.components))
