"""Eigenvalue data for a contraction's linear part and its resonance sets.

Block indices are 1-based at the public surface (``nu``, ``i``), matching
the usual indexing of the eigenvalues lambda_1..lambda_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polyring import GaussRat, block_ranges

EXACT = "exact"
POWER = "power"


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Distinct contracting eigenvalues with the dimension of each block.

    ``mode == "exact"``: ``values`` are GaussRats.
    ``mode == "power"``: lambda_nu = base ** exponents[nu] with a real base in (0, 1).
    """

    mode: str
    block_dims: Tuple[int, ...]
    values: Tuple[GaussRat, ...] = ()
    base: Optional[Fraction] = None
    exponents: Tuple[int, ...] = ()
    _abs2: Tuple[Fraction, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "block_dims", tuple(int(d) for d in self.block_dims))
        if self.mode == POWER:
            if self.base is None:
                raise SpectrumError("power mode needs a base")
            base = Fraction(self.base)
            object.__setattr__(self, "base", base)
            object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
            if not 0 < base < 1:
                raise SpectrumError(f"base must lie in (0, 1), got {base}")
            if any(e < 1 for e in self.exponents):
                raise SpectrumError("exponents must be positive integers")
            if len(set(self.exponents)) != len(self.exponents):
                raise SpectrumError("eigenvalues must be pairwise distinct")
            if list(self.exponents) != sorted(self.exponents):
                raise SpectrumError("exponents must be nondecreasing so that |lambda_m| <= ... <= |lambda_1|")
            vals = tuple(GaussRat(base ** e) for e in self.exponents)
            object.__setattr__(self, "values", vals)
        elif self.mode == EXACT:
            vals = tuple(GaussRat.coerce(v) for v in self.values)
            object.__setattr__(self, "values", vals)
            if len(set(vals)) != len(vals):
                raise SpectrumError("eigenvalues must be pairwise distinct")
            moduli = [v.abs2() for v in vals]
            if any(a == 0 for a in moduli):
                raise SpectrumError("zero eigenvalue")
            if any(a >= 1 for a in moduli):
                raise SpectrumError("every eigenvalue must have modulus < 1")
            if any(moduli[j] < moduli[j + 1] for j in range(len(moduli) - 1)):
                raise SpectrumError("eigenvalues must be ordered |lambda_m| <= ... <= |lambda_1|")
        else:
            raise SpectrumError(f"unknown mode {self.mode!r}")
        if not self.values:
            raise SpectrumError("empty spectrum")
        if len(self.block_dims) != len(self.values):
            raise SpectrumError(f"{len(self.values)} eigenvalues but {len(self.block_dims)} block dimensions")
        if any(d < 1 for d in self.block_dims):
            raise SpectrumError("block dimensions must be positive")
        object.__setattr__(self, "_abs2", tuple(v.abs2() for v in self.values))

    @classmethod
    def power(cls, base, exponents, block_dims=None) -> "Spectrum":
        exponents = tuple(exponents)
        dims = tuple(block_dims) if block_dims is not None else (1,) * len(exponents)
        return cls(POWER, dims, base=Fraction(base), exponents=exponents)

    @classmethod
    def exact(cls, values, block_dims=None) -> "Spectrum":
        values = tuple(GaussRat.coerce(v) for v in values)
        dims = tuple(block_dims) if block_dims is not None else (1,) * len(values)
        return cls(EXACT, dims, values=values)

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def n(self) -> int:
        return sum(self.block_dims)

    def eigenvalue(self, nu: int) -> GaussRat:
        return self.values[nu - 1]

    def variable_eigenvalues(self) -> Tuple[GaussRat, ...]:
        """Diagonal of the linear part, one entry per ambient variable."""
        out: List[GaussRat] = []
        for lam, d in zip(self.values, self.block_dims):
            out.extend([lam] * d)
        return tuple(out)

    def block_of(self, var: int) -> int:
        """1-based block index of a 0-based variable index."""
        for nu, r in enumerate(block_ranges(self.block_dims), start=1):
            if var in r:
                return nu
        raise IndexError(var)

    def block_range(self, nu: int) -> range:
        return block_ranges(self.block_dims)[nu - 1]

    def tangent_variable(self, i: int) -> int:
        """0-based index of the coordinate z_i whose real part is the tangent direction."""
        return self.block_range(i).start

    def monomial_value(self, I: Sequence[int], Iprime: Optional[Sequence[int]] = None) -> GaussRat:
        """lambda^I * conj(lambda)^I' for block-degree vectors I, I'."""
        Iprime = Iprime if Iprime is not None else (0,) * self.m
        out = GaussRat(1)
        for lam, a, b in zip(self.values, I, Iprime):
            if a:
                out = out * lam ** a
            if b:
                out = out * lam.conj() ** b
        return out

    def check_nu(self, nu: int):
        if not 1 <= nu <= self.m:
            raise SpectrumError(f"block index {nu} out of range 1..{self.m}")


def degree_bound(s: Spectrum) -> int:
    """Largest total degree at which a monomial can still reach |lambda_m|.

    Every monomial of total degree d has modulus at most |lambda_1|**d, so
    this is the largest d with |lambda_1|**d >= |lambda_m|.
    """
    if s.mode == POWER:
        return s.exponents[-1] // s.exponents[0]
    top, low = s._abs2[0], s._abs2[-1]
    d, acc = 1, top
    while acc * top >= low:
        acc *= top
        d += 1
    return d


def _knapsack(s: Spectrum, nu: int, conjugates: bool) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Enumerate (I, I') with sum >= 2 and lambda_nu = lambda^I conj(lambda)^I'.

    Depth-first over slots, pruning as soon as the partial product's modulus
    drops below |lambda_nu| (every further factor only shrinks it).
    """
    m = s.m
    target = s.eigenvalue(nu)
    dmax = degree_bound(s)
    nslots = 2 * m if conjugates else m
    found = []

    if s.mode == POWER:
        weights = [s.exponents[j % m] for j in range(nslots)]
        goal = s.exponents[nu - 1]

        def rec(slot, exps, wsum, deg):
            if slot == nslots:
                if wsum == goal and deg >= 2:
                    found.append(tuple(exps))
                return
            e = 0
            while wsum + e * weights[slot] <= goal and deg + e <= dmax:
                exps.append(e)
                rec(slot + 1, exps, wsum + e * weights[slot], deg + e)
                exps.pop()
                e += 1

        rec(0, [], 0, 0)
    else:
        moduli = [s._abs2[j % m] for j in range(nslots)]
        factors = [s.values[j] if j < m else s.values[j - m].conj() for j in range(nslots)]
        goal_abs2 = target.abs2()

        def rec(slot, exps, value, mod2, deg):
            if slot == nslots:
                if deg >= 2 and value == target:
                    found.append(tuple(exps))
                return
            e = 0
            while mod2 >= goal_abs2 and deg + e <= dmax:
                exps.append(e)
                rec(slot + 1, exps, value, mod2, deg + e)
                exps.pop()
                value = value * factors[slot]
                mod2 = mod2 * moduli[slot]
                e += 1

        rec(0, [], GaussRat(1), Fraction(1), 0)

    out = []
    for exps in found:
        I = exps[:m]
        Ip = exps[m:] if conjugates else (0,) * m
        out.append((I, Ip))
    out.sort()
    return out


def resonances(s: Spectrum, nu: int) -> List[Tuple[int, ...]]:
    """Multi-indices I (length m) with sum >= 2 and lambda_nu = lambda^I, lexicographic."""
    s.check_nu(nu)
    return [I for I, _ in _knapsack(s, nu, conjugates=False)]


def extended_resonances(s: Spectrum, nu: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Pairs (I, I') with sum >= 2 and lambda_nu = lambda^I conj(lambda)^I', lexicographic."""
    s.check_nu(nu)
    return _knapsack(s, nu, conjugates=True)


def admissible_tangent_indices(s: Spectrum) -> List[int]:
    """Blocks whose eigenvalue is real; only these can carry an invariant tangent hyperplane."""
    return [nu for nu in range(1, s.m + 1) if s.eigenvalue(nu).is_real()]


def is_resonant(s: Spectrum, nu: int, I: Sequence[int]) -> bool:
    return sum(I) >= 2 and s.monomial_value(I) == s.eigenvalue(nu)
