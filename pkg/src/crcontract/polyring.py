"""Exact sparse polynomials in z_1..z_n and their conjugates.

Coefficients live in the Gaussian rationals Q(i).  A polynomial is a map
from monomial keys ``(hol, antihol)`` to nonzero coefficients; the key
``((2, 0), (0, 1))`` stands for ``z1**2 * conj(z2)``.  Zero coefficients
are never stored, so structural equality is mathematical equality.

Holomorphic polynomial self-maps (jets) are tuples of polynomials with
``antihol == 0`` everywhere, truncated at a total degree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

Rational = Fraction


class GaussRat:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        if isinstance(value, float):
            raise TypeError("floating-point values are not exact")
        return cls(value, 0)

    def __repr__(self):
        if self.im == 0:
            return f"GaussRat({self.re})"
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"

    def __eq__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __mul__(self, other):
        other = GaussRat.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRat(a * c, 0)
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * GaussRat.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = GaussRat(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exactly."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRat":
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero GaussRat")
        return GaussRat(self.re / n, -self.im / n)

    def is_real(self) -> bool:
        return self.im == 0


ZERO = GaussRat(0)
ONE = GaussRat(1)
I_UNIT = GaussRat(0, 1)


class MonoKey(NamedTuple):
    """Exponents of ``z`` (hol) and of ``conj(z)`` (antihol)."""

    hol: Tuple[int, ...]
    antihol: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.hol) + sum(self.antihol)

    def swapped(self) -> "MonoKey":
        return MonoKey(self.antihol, self.hol)

    def times(self, other: "MonoKey") -> "MonoKey":
        return MonoKey(
            tuple(a + b for a, b in zip(self.hol, other.hol)),
            tuple(a + b for a, b in zip(self.antihol, other.antihol)),
        )

    def is_holomorphic(self) -> bool:
        return not any(self.antihol)


def block_ranges(blocks: Sequence[int]) -> List[range]:
    out, start = [], 0
    for d in blocks:
        out.append(range(start, start + d))
        start += d
    return out


def block_degree(exps: Sequence[int], blocks: Sequence[int]) -> Tuple[int, ...]:
    """Sum exponents over each block's variable range."""
    return tuple(sum(exps[j] for j in r) for r in block_ranges(blocks))


class RealPoly:
    """Sparse polynomial in z and conj(z) with GaussRat coefficients.

    Treat instances as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("nvars", "blocks", "terms")

    def __init__(self, nvars: int, terms=None, blocks: Optional[Sequence[int]] = None):
        self.nvars = nvars
        self.blocks = tuple(blocks) if blocks is not None else (1,) * nvars
        if sum(self.blocks) != nvars or any(b < 1 for b in self.blocks):
            raise ValueError(f"block layout {self.blocks} does not partition {nvars} variables")
        clean: Dict[MonoKey, GaussRat] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                key = MonoKey(tuple(key[0]), tuple(key[1]))
                if len(key.hol) != nvars or len(key.antihol) != nvars:
                    raise ValueError(f"monomial {key} has wrong length for nvars={nvars}")
                if any(e < 0 for e in key.hol + key.antihol):
                    raise ValueError(f"negative exponent in {key}")
                c = clean.get(key, ZERO) + GaussRat.coerce(coeff)
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self.terms = dict(sorted(clean.items()))

    # construction helpers
    @classmethod
    def zero(cls, nvars, blocks=None) -> "RealPoly":
        return cls(nvars, None, blocks)

    @classmethod
    def const(cls, nvars, c, blocks=None) -> "RealPoly":
        key = MonoKey((0,) * nvars, (0,) * nvars)
        return cls(nvars, {key: c}, blocks)

    @classmethod
    def var(cls, nvars, j, conjugate=False, blocks=None) -> "RealPoly":
        e = tuple(1 if k == j else 0 for k in range(nvars))
        z = (0,) * nvars
        key = MonoKey(z, e) if conjugate else MonoKey(e, z)
        return cls(nvars, {key: ONE}, blocks)

    @classmethod
    def monomial(cls, nvars, hol, antihol=None, coeff=1, blocks=None) -> "RealPoly":
        antihol = tuple(antihol) if antihol is not None else (0,) * nvars
        return cls(nvars, {MonoKey(tuple(hol), antihol): coeff}, blocks)

    def _like(self, terms) -> "RealPoly":
        p = RealPoly.__new__(RealPoly)
        p.nvars = self.nvars
        p.blocks = self.blocks
        p.terms = dict(sorted((k, c) for k, c in terms.items() if c))
        return p

    def _check(self, other: "RealPoly"):
        if self.nvars != other.nvars or self.blocks != other.blocks:
            raise ValueError(
                f"mismatched variable layouts: {self.nvars}/{self.blocks} vs {other.nvars}/{other.blocks}"
            )

    # inspection
    def __iter__(self) -> Iterator[Tuple[MonoKey, GaussRat]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, RealPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def coeff(self, hol, antihol=None) -> GaussRat:
        antihol = tuple(antihol) if antihol is not None else (0,) * self.nvars
        return self.terms.get(MonoKey(tuple(hol), antihol), ZERO)

    def degree(self) -> int:
        return max((k.degree for k in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((k.degree for k in self.terms), default=-1)

    def is_holomorphic(self) -> bool:
        return all(k.is_holomorphic() for k in self.terms)

    def __repr__(self):
        return f"RealPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.terms.items():
            factors = []
            for j, e in enumerate(key.hol):
                if e:
                    factors.append(f"z{j + 1}" + (f"^{e}" if e > 1 else ""))
            for j, e in enumerate(key.antihol):
                if e:
                    factors.append(f"zb{j + 1}" + (f"^{e}" if e > 1 else ""))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    # arithmetic
    def __add__(self, other: "RealPoly") -> "RealPoly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return self._like(out)

    def __neg__(self) -> "RealPoly":
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "RealPoly") -> "RealPoly":
        return self + (-other)

    def scale(self, c) -> "RealPoly":
        c = GaussRat.coerce(c)
        return self._like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RealPoly):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def mul_trunc(self, other: "RealPoly", k: Optional[int]) -> "RealPoly":
        """Product keeping only total degree <= k (all terms when k is None)."""
        self._check(other)
        out: Dict[MonoKey, GaussRat] = {}
        for k1, c1 in self.terms.items():
            d1 = k1.degree
            for k2, c2 in other.terms.items():
                if k is not None and d1 + k2.degree > k:
                    continue
                key = k1.times(k2)
                out[key] = out.get(key, ZERO) + c1 * c2
        return self._like(out)

    def pow_trunc(self, e: int, k: Optional[int]) -> "RealPoly":
        result = RealPoly.const(self.nvars, 1, self.blocks)
        base = self
        while e:
            if e & 1:
                result = result.mul_trunc(base, k)
            e >>= 1
            if e:
                base = base.mul_trunc(base, k)
        return result

    def truncate(self, k: Optional[int]) -> "RealPoly":
        if k is None:
            return self
        return self._like({key: c for key, c in self.terms.items() if key.degree <= k})

    def homogeneous_part(self, d: int) -> "RealPoly":
        return self._like({key: c for key, c in self.terms.items() if key.degree == d})

    def filter(self, pred) -> "RealPoly":
        return self._like({key: c for key, c in self.terms.items() if pred(key)})

    def conj(self) -> "RealPoly":
        return conj_poly(self)

    def block_degree(self, key: MonoKey) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return block_degree(key.hol, self.blocks), block_degree(key.antihol, self.blocks)


def poly_mul(p: RealPoly, q: RealPoly) -> RealPoly:
    """Exact product of two polynomials over the same variable layout."""
    return p.mul_trunc(q, None)


def conj_poly(p: RealPoly) -> RealPoly:
    """Swap z and conj(z) and conjugate every coefficient."""
    return p._like({key.swapped(): c.conj() for key, c in p.terms.items()})


def is_real_valued(p: RealPoly) -> bool:
    return all(p.terms.get(key.swapped(), ZERO) == c.conj() for key, c in p.terms.items())


def substitute(p: RealPoly, hol_images: Sequence[RealPoly], antihol_images: Sequence[RealPoly],
               k: Optional[int] = None) -> RealPoly:
    """Replace z_j by hol_images[j] and conj(z_j) by antihol_images[j].

    The images may live in a different ring than ``p``; the result lives in
    the images' ring.  Truncation at total degree ``k`` is applied to every
    intermediate product.
    """
    if len(hol_images) != p.nvars or len(antihol_images) != p.nvars:
        raise ValueError(f"need {p.nvars} images, got {len(hol_images)}/{len(antihol_images)}")
    target = hol_images[0] if hol_images else None
    if target is None:
        return p
    nv, blocks = target.nvars, target.blocks
    one = RealPoly.const(nv, 1, blocks)
    cache: Dict[Tuple[int, int, int], RealPoly] = {}

    def power(side: int, j: int, e: int) -> RealPoly:
        if e == 0:
            return one
        key = (side, j, e)
        if key not in cache:
            base = hol_images[j] if side == 0 else antihol_images[j]
            cache[key] = base if e == 1 else power(side, j, e - 1).mul_trunc(base, k)
        return cache[key]

    acc: Dict[MonoKey, GaussRat] = {}
    for key, c in p.terms.items():
        term = RealPoly.const(nv, c, blocks)
        for j, e in enumerate(key.hol):
            if e:
                term = term.mul_trunc(power(0, j, e), k)
                if not term:
                    break
        else:
            for j, e in enumerate(key.antihol):
                if e:
                    term = term.mul_trunc(power(1, j, e), k)
                    if not term:
                        break
        for mk, mc in term.terms.items():
            acc[mk] = acc.get(mk, ZERO) + mc
    return one._like(acc)


class JetMap:
    """Truncated holomorphic self-map of C^n fixing 0 with diagonal linear part.

    ``components[j]`` is the full j-th component (linear term included).
    """

    __slots__ = ("n", "order", "components", "blocks")

    def __init__(self, components: Sequence[RealPoly], order: int):
        comps = tuple(components)
        if not comps:
            raise ValueError("a jet needs at least one component")
        n = comps[0].nvars
        blocks = comps[0].blocks
        if len(comps) != n:
            raise ValueError(f"jet on C^{n} needs {n} components, got {len(comps)}")
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        for j, c in enumerate(comps):
            c._check(comps[0])
            if not c.is_holomorphic():
                raise ValueError(f"component {j + 1} is not holomorphic")
            for key in c.terms:
                if key.degree == 0:
                    raise ValueError(f"component {j + 1} has a constant term; jets must fix 0")
                if key.degree == 1 and key.hol[j] != 1:
                    raise ValueError(f"component {j + 1} has off-diagonal linear term {key.hol}")
        self.n = n
        self.order = order
        self.blocks = blocks
        self.components = tuple(c.truncate(order) for c in comps)

    @classmethod
    def from_parts(cls, linear: Sequence, nonlinear: Sequence[RealPoly], order: int,
                   blocks: Optional[Sequence[int]] = None) -> "JetMap":
        n = len(linear)
        comps = []
        for j, lam in enumerate(linear):
            lin = RealPoly.var(n, j, blocks=blocks).scale(lam)
            comps.append(lin + nonlinear[j] if nonlinear[j] is not None else lin)
        return cls(comps, order)

    @classmethod
    def identity(cls, n: int, order: int, blocks=None) -> "JetMap":
        return cls([RealPoly.var(n, j, blocks=blocks) for j in range(n)], order)

    @classmethod
    def diagonal(cls, linear: Sequence, order: int, blocks=None) -> "JetMap":
        n = len(linear)
        return cls([RealPoly.var(n, j, blocks=blocks).scale(lam) for j, lam in enumerate(linear)], order)

    @property
    def linear(self) -> Tuple[GaussRat, ...]:
        out = []
        for j, c in enumerate(self.components):
            e = tuple(1 if k == j else 0 for k in range(self.n))
            out.append(c.coeff(e))
        return tuple(out)

    def nonlinear(self, j: int) -> RealPoly:
        return self.components[j].filter(lambda key: key.degree >= 2)

    def is_linear(self) -> bool:
        return all(not self.nonlinear(j) for j in range(self.n))

    def truncate(self, k: int) -> "JetMap":
        return JetMap(self.components, k)

    def with_order(self, k: int) -> "JetMap":
        return JetMap(self.components, k)

    def __eq__(self, other):
        if not isinstance(other, JetMap):
            return NotImplemented
        return self.order == other.order and self.components == other.components

    def __hash__(self):
        return hash((self.order, self.components))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.components)
        return f"JetMap(order={self.order}; {body})"

    def __sub__(self, other: "JetMap") -> Tuple[RealPoly, ...]:
        return tuple(a - b for a, b in zip(self.components, other.components))

    def inverse(self, k: Optional[int] = None) -> "JetMap":
        """Compositional inverse mod degree k+1 (linear part must be invertible)."""
        k = self.order if k is None else k
        lin = self.linear
        if any(not lam for lam in lin):
            raise ValueError("jet has a singular linear part")
        inv_lin = [lam.inverse() for lam in lin]
        w = [RealPoly.var(self.n, j, blocks=self.blocks) for j in range(self.n)]
        u = [w[j].scale(inv_lin[j]) for j in range(self.n)]
        for _ in range(max(k - 1, 0)):
            nl = [substitute(self.nonlinear(j), u, u, k) for j in range(self.n)]
            u = [(w[j] - nl[j]).scale(inv_lin[j]).truncate(k) for j in range(self.n)]
        return JetMap(u, k)


def compose_jet(f: JetMap, g: JetMap, k: Optional[int] = None) -> JetMap:
    """Taylor expansion of f(g(z)) truncated at total degree k."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
    if k is None:
        k = min(f.order, g.order)
    comps = g.components
    return JetMap([substitute(c, comps, comps, k) for c in f.components], k)


def substitute_real(p: RealPoly, f: JetMap, k: Optional[int] = None) -> RealPoly:
    """p with z_j <- f_j(z) and conj(z_j) <- conj(f_j(z)), truncated at degree k."""
    if p.nvars != f.n:
        raise ValueError(f"dimension mismatch: polynomial in {p.nvars} variables, jet on C^{f.n}")
    hol = list(f.components)
    anti = [conj_poly(c) for c in hol]
    return substitute(p, hol, anti, k)


def monomials_of_degree(nvars: int, d: int) -> Iterable[Tuple[int, ...]]:
    """All exponent vectors of length nvars and total degree d, lexicographic descending."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest
