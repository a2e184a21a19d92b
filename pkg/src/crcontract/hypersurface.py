"""Real hypersurfaces invariant under a holomorphic contraction in normal form.

A model with tangent block ``i`` is the hypersurface

    z_t + conj(z_t) = rho(z, conj z),

where ``z_t`` is the first coordinate of block ``i`` and ``rho`` is a
real-valued polynomial supported on the extended resonances of block ``i``.
Invariance under ``f`` means

    lambda_i * rho + (c + conj c) = rho(f(z), conj f(z)),

with ``c`` the nonlinear part of the ``z_t`` component of ``f``.  For fixed
``f`` this is linear in the coefficients of ``rho``; it is split into real
equations over real unknowns and solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .normalform import centralizer_member
from .polyring import (
    I_UNIT,
    ONE,
    ZERO,
    GaussRat,
    JetMap,
    MonoKey,
    RealPoly,
    block_degree,
    conj_poly,
    is_real_valued,
    monomials_of_degree,
    substitute_real,
)
from .spectrum import Spectrum, admissible_tangent_indices, extended_resonances

SOLVABLE = "Solvable"
INCONSISTENT = "Inconsistent"


class HypersurfaceError(ValueError):
    pass


def _check_tangent(s: Spectrum, i: int):
    s.check_nu(i)
    if i not in admissible_tangent_indices(s):
        raise HypersurfaceError(f"tangent index {i} is inadmissible: lambda_{i} = {s.eigenvalue(i)} is not real")


def support_keys(s: Spectrum, i: int) -> List[MonoKey]:
    """Per-variable monomial keys whose block degrees lie in the extended resonances of block i."""
    n = s.n
    out = []
    for I, Ip in extended_resonances(s, i):
        hol_choices = [list(monomials_of_degree(len(s.block_range(nu)), I[nu - 1])) for nu in range(1, s.m + 1)]
        anti_choices = [list(monomials_of_degree(len(s.block_range(nu)), Ip[nu - 1])) for nu in range(1, s.m + 1)]
        for hol_parts in product(*hol_choices):
            hol = tuple(e for part in hol_parts for e in part)
            for anti_parts in product(*anti_choices):
                anti = tuple(e for part in anti_parts for e in part)
                out.append(MonoKey(hol, anti))
    assert all(len(k.hol) == n for k in out)
    return sorted(out)


@dataclass(frozen=True)
class Unknown:
    """One real scalar unknown: the real or imaginary part of a pair, or a self-paired real coefficient."""

    key: MonoKey
    part: str  # "re", "im" or "real"

    def basis_poly(self, n: int, blocks) -> RealPoly:
        if self.part == "real":
            return RealPoly(n, {self.key: ONE}, blocks)
        partner = self.key.swapped()
        if self.part == "re":
            return RealPoly(n, {self.key: ONE, partner: ONE}, blocks)
        return RealPoly(n, {self.key: I_UNIT, partner: -I_UNIT}, blocks)


def ansatz(s: Spectrum, i: int) -> List[Unknown]:
    """Real unknowns parametrizing every real-valued rho supported on the extended resonances.

    Each unordered pair {K, swap(K)} with K != swap(K) contributes the real
    and imaginary parts of the coefficient at the lexicographically larger
    key; each self-paired key contributes one real unknown.
    """
    _check_tangent(s, i)
    keys = support_keys(s, i)
    keyset = set(keys)
    out = []
    for key in sorted(keys, reverse=True):
        partner = key.swapped()
        if partner == key:
            out.append(Unknown(key, "real"))
        elif key > partner:
            if partner not in keyset:
                raise AssertionError(f"extended resonances not closed under conjugation at {key}")
            out.extend([Unknown(key, "re"), Unknown(key, "im")])
    return out


class HypersurfaceModel:
    """Defining data of ``z_t + conj(z_t) = rho`` for tangent block ``i``."""

    __slots__ = ("tangent_index", "spectrum", "coefficients")

    def __init__(self, spectrum: Spectrum, tangent_index: int, coefficients: Dict[MonoKey, GaussRat]):
        _check_tangent(spectrum, tangent_index)
        self.spectrum = spectrum
        self.tangent_index = tangent_index
        coeffs = {MonoKey(tuple(k[0]), tuple(k[1])): GaussRat.coerce(c) for k, c in dict(coefficients).items()}
        self.coefficients = dict(sorted((k, c) for k, c in coeffs.items() if c))
        support = set(support_keys(spectrum, tangent_index))
        for key, c in self.coefficients.items():
            if key not in support:
                raise HypersurfaceError(f"monomial {key} is not an extended resonance of block {tangent_index}")
            if self.coefficients.get(key.swapped(), ZERO) != c.conj():
                raise HypersurfaceError(f"reality pairing fails at {key}: coefficient of the swapped key must be {c.conj()}")

    @classmethod
    def from_unknowns(cls, s: Spectrum, i: int, unknowns: Sequence[Unknown], x: Sequence[Fraction]) -> "HypersurfaceModel":
        coeffs: Dict[MonoKey, GaussRat] = {}
        for u, v in zip(unknowns, x):
            if not v:
                continue
            if u.part == "real":
                coeffs[u.key] = coeffs.get(u.key, ZERO) + GaussRat(v)
            else:
                c = GaussRat(v) if u.part == "re" else GaussRat(0, v)
                coeffs[u.key] = coeffs.get(u.key, ZERO) + c
                coeffs[u.key.swapped()] = coeffs.get(u.key.swapped(), ZERO) + c.conj()
        return cls(s, i, coeffs)

    @classmethod
    def from_pairs(cls, s: Spectrum, i: int, values: Dict[MonoKey, GaussRat]) -> "HypersurfaceModel":
        """Build from one coefficient per pair; the swapped key gets the conjugate."""
        coeffs: Dict[MonoKey, GaussRat] = {}
        for k, c in values.items():
            k = MonoKey(tuple(k[0]), tuple(k[1]))
            c = GaussRat.coerce(c)
            if k == k.swapped():
                if not c.is_real():
                    raise HypersurfaceError(f"self-paired coefficient at {k} must be real")
                coeffs[k] = c
            else:
                coeffs[k] = c
                coeffs[k.swapped()] = c.conj()
        return cls(s, i, coeffs)

    @property
    def n(self) -> int:
        return self.spectrum.n

    def coeff(self, hol, antihol) -> GaussRat:
        return self.coefficients.get(MonoKey(tuple(hol), tuple(antihol)), ZERO)

    def rho(self) -> RealPoly:
        return RealPoly(self.n, self.coefficients, self.spectrum.block_dims)

    def defining_poly(self) -> RealPoly:
        """z_t + conj(z_t) - rho; the hypersurface is its zero set."""
        t = self.spectrum.tangent_variable(self.tangent_index)
        blocks = self.spectrum.block_dims
        zt = RealPoly.var(self.n, t, blocks=blocks)
        return zt + conj_poly(zt) - self.rho()

    def unknown_vector(self, unknowns: Sequence[Unknown]) -> Tuple[Fraction, ...]:
        out = []
        for u in unknowns:
            c = self.coefficients.get(u.key, ZERO)
            out.append(c.im if u.part == "im" else c.re)
        return tuple(out)

    def __add__(self, other: "HypersurfaceModel") -> "HypersurfaceModel":
        coeffs = dict(self.coefficients)
        for k, c in other.coefficients.items():
            coeffs[k] = coeffs.get(k, ZERO) + c
        return HypersurfaceModel(self.spectrum, self.tangent_index, coeffs)

    def scale(self, r) -> "HypersurfaceModel":
        r = Fraction(r)
        return HypersurfaceModel(self.spectrum, self.tangent_index,
                                 {k: c * GaussRat(r) for k, c in self.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, HypersurfaceModel):
            return NotImplemented
        return (self.spectrum == other.spectrum and self.tangent_index == other.tangent_index
                and self.coefficients == other.coefficients)

    def __repr__(self):
        return f"HypersurfaceModel(i={self.tangent_index}, rho={self.rho()})"


@dataclass(frozen=True)
class InvarianceSystem:
    unknowns: Tuple[Unknown, ...]
    rows: Tuple[Tuple[MonoKey, str], ...]
    A: Tuple[Tuple[Fraction, ...], ...]
    b: Tuple[Fraction, ...]
    columns: Tuple[RealPoly, ...] = field(repr=False)
    forcing: RealPoly = field(repr=False)


def forcing_term(f: JetMap, s: Spectrum, i: int) -> RealPoly:
    """c + conj(c) for the nonlinear part c of the tangent component of f."""
    t = s.tangent_variable(i)
    c = f.nonlinear(t)
    c = RealPoly(s.n, c.terms, s.block_dims)
    return c + conj_poly(c)


def _as_spectrum_jet(f: JetMap, s: Spectrum) -> JetMap:
    if f.n != s.n:
        raise HypersurfaceError(f"jet on C^{f.n} but spectrum has {s.n} variables")
    if f.blocks == s.block_dims:
        return f
    return JetMap([RealPoly(f.n, c.terms, s.block_dims) for c in f.components], f.order)


def _transport(poly: RealPoly, f: JetMap, lam_i: GaussRat) -> RealPoly:
    return poly.scale(lam_i) - substitute_real(poly, f, None)


def invariance_system(f: JetMap, s: Spectrum, i: int) -> InvarianceSystem:
    """Assemble the real-linear system whose solutions are the invariant models.

    Asserts while assembling that every produced monomial is an extended
    resonance of block i and that the equation at (I, I') is the conjugate
    of the one at (I', I).
    """
    _check_tangent(s, i)
    f = _as_spectrum_jet(f, s)
    if not centralizer_member(f, s):
        raise HypersurfaceError("jet is not in normal form: it has non-resonant terms")
    lam_i = s.eigenvalue(i)
    unknowns = ansatz(s, i)
    support = set(support_keys(s, i))
    columns = [_transport(u.basis_poly(s.n, s.block_dims), f, lam_i) for u in unknowns]
    forcing = forcing_term(f, s, i)

    monos = set()
    for poly in columns + [forcing]:
        for key in poly.terms:
            if key not in support:
                raise AssertionError(f"monomial {key} escaped the extended-resonance support")
            monos.add(key)
        if not is_real_valued(poly):
            raise AssertionError("assembled equation is not conjugation-consistent")

    rows, A, b = [], [], []
    for key in sorted(monos):
        eq = [col.terms.get(key, ZERO) for col in columns]
        rhs = -forcing.terms.get(key, ZERO)
        partner = [col.terms.get(key.swapped(), ZERO) for col in columns]
        if [e.conj() for e in partner] != eq or forcing.terms.get(key.swapped(), ZERO).conj() != -rhs:
            raise AssertionError(f"equation at {key} is not the conjugate of the one at {key.swapped()}")
        if key < key.swapped():
            continue  # carried by its partner's row
        rows.append((key, "re"))
        A.append(tuple(e.re for e in eq))
        b.append(rhs.re)
        if key != key.swapped():
            rows.append((key, "im"))
            A.append(tuple(e.im for e in eq))
            b.append(rhs.im)
    return InvarianceSystem(tuple(unknowns), tuple(rows), tuple(A), tuple(b), tuple(columns), forcing)


@dataclass(frozen=True)
class SolutionSpace:
    status: str
    particular: Optional[HypersurfaceModel]
    kernel_basis: Tuple[HypersurfaceModel, ...]
    unknowns: Tuple[Unknown, ...] = ()

    @property
    def real_dimension(self) -> int:
        return len(self.kernel_basis)

    @property
    def solvable(self) -> bool:
        return self.status == SOLVABLE

    def element(self, weights: Sequence) -> HypersurfaceModel:
        """particular + sum(w_k * kernel_k) for rational weights."""
        if not self.solvable:
            raise HypersurfaceError("inconsistent system has no elements")
        m = self.particular
        for w, v in zip(weights, self.kernel_basis):
            if w:
                m = m + v.scale(w)
        return m


def verify_invariance(f: JetMap, M: HypersurfaceModel, k: Optional[int] = None) -> RealPoly:
    """lambda_i * rho + (c + conj c) - rho(f, conj f), truncated at k; zero iff invariant."""
    s, i = M.spectrum, M.tangent_index
    f = _as_spectrum_jet(f, s)
    rho = M.rho()
    lam_i = s.eigenvalue(i)
    res = rho.scale(lam_i) + forcing_term(f, s, i) - substitute_real(rho, f, k)
    return res.truncate(k)


def solve_invariant_surfaces(f: JetMap, s: Spectrum, i: int) -> SolutionSpace:
    """All models invariant under f with tangent block i, or Inconsistent."""
    system = invariance_system(f, s, i)
    sol = linalg.solve_affine(system.A, system.b, len(system.unknowns))
    if not sol.consistent:
        return SolutionSpace(INCONSISTENT, None, (), system.unknowns)
    part = HypersurfaceModel.from_unknowns(s, i, system.unknowns, sol.particular)
    kernel = tuple(HypersurfaceModel.from_unknowns(s, i, system.unknowns, v) for v in sol.kernel)
    space = SolutionSpace(SOLVABLE, part, kernel, system.unknowns)

    # re-derive rather than trust the elimination
    checks = [part, space.element([1] * len(kernel))]
    checks += [part + v for v in kernel]
    for m in checks:
        if verify_invariance(f, m):
            raise AssertionError("solver produced a non-invariant model")
        if not is_real_valued(m.rho()):
            raise AssertionError("solver produced a non-real defining function")
    return space


# -- Hermitian part ---------------------------------------------------------

@dataclass(frozen=True)
class HermitianReport:
    purely_quadratic: bool
    variables: Tuple[int, ...]
    matrix: Tuple[Tuple[GaussRat, ...], ...]
    leading_minors: Tuple[Fraction, ...]
    signature: Tuple[int, int, int]  # (positive, negative, zero)
    label: str

    @property
    def definite(self) -> bool:
        p, q, z = self.signature
        size = len(self.variables)
        return size > 0 and (p == size or q == size)


def _det(mat: List[List[GaussRat]]) -> GaussRat:
    a = [row[:] for row in mat]
    size = len(a)
    det = ONE
    for c in range(size):
        p = next((r for r in range(c, size) if a[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, size):
            if a[r][c]:
                fct = a[r][c] * inv
                a[r] = [x - fct * y for x, y in zip(a[r], a[c])]
    return det


def _charpoly(mat: List[List[GaussRat]]) -> List[GaussRat]:
    """Coefficients of det(xI - M), highest degree first (Faddeev-LeVerrier)."""
    size = len(mat)
    coeffs = [ONE]
    Mk = [[ZERO] * size for _ in range(size)]
    for k in range(1, size + 1):
        # M_k = M (M_{k-1} + c_{k-1} I)
        prev = [[Mk[r][c] + (coeffs[-1] if r == c else ZERO) for c in range(size)] for r in range(size)]
        Mk = [[sum((mat[r][j] * prev[j][c] for j in range(size)), ZERO) for c in range(size)] for r in range(size)]
        trace = sum((Mk[r][r] for r in range(size)), ZERO)
        coeffs.append(-trace / k)
    return coeffs


def _sign_changes(seq: Sequence[Fraction]) -> int:
    signs = [x > 0 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def hermitian_signature(mat: List[List[GaussRat]]) -> Tuple[int, int, int]:
    """Inertia of a Hermitian matrix via Descartes' rule on its (real-rooted) characteristic polynomial."""
    size = len(mat)
    if size == 0:
        return (0, 0, 0)
    cp = _charpoly(mat)
    if any(not c.is_real() for c in cp):
        raise AssertionError("characteristic polynomial of a Hermitian matrix must be real")
    real = [c.re for c in cp]
    zero = 0
    while real and real[-1] == 0:
        real.pop()
        zero += 1
    pos = _sign_changes(real)
    deg = len(real) - 1
    neg = _sign_changes([c if (deg - j) % 2 == 0 else -c for j, c in enumerate(real)])
    return (pos, neg, zero)


def hermitian_report(obj: Union[SolutionSpace, HypersurfaceModel], s: Spectrum, i: int) -> HermitianReport:
    """Purely-quadratic test and exact signature of the Hermitian (z_a conj z_b) part.

    For a SolutionSpace the particular solution is inspected.
    """
    _check_tangent(s, i)
    if isinstance(obj, SolutionSpace):
        if not obj.solvable:
            raise HypersurfaceError("cannot report on an inconsistent solution space")
        model = obj.particular
    else:
        model = obj
    purely_quadratic = all(sum(I) + sum(Ip) == 2 for I, Ip in extended_resonances(s, i))
    variables = tuple(v for nu in range(1, i) for v in s.block_range(nu))
    n = s.n
    mat = []
    for a in variables:
        row = []
        for b in variables:
            hol = tuple(1 if j == a else 0 for j in range(n))
            anti = tuple(1 if j == b else 0 for j in range(n))
            row.append(model.coeff(hol, anti))
        mat.append(row)
    minors = []
    for k in range(1, len(variables) + 1):
        d = _det([r[:k] for r in mat[:k]])
        if not d.is_real():
            raise AssertionError("leading minor of a Hermitian matrix must be real")
        minors.append(d.re)
    sig = hermitian_signature(mat)
    size = len(variables)
    if not purely_quadratic:
        label = "not purely quadratic"
    elif size and (sig[0] == size or sig[1] == size):
        label = "sphere model (up to definite Hermitian form)"
    elif sig[0] and sig[1] and not sig[2]:
        label = "hyperquadric, indefinite"
    else:
        label = "degenerate Hermitian form"
    return HermitianReport(purely_quadratic, variables, tuple(tuple(r) for r in mat), tuple(minors), sig, label)
