"""Built-in worked instance: eigenvalues lambda, lambda^2, lambda^4 in C^3.

The normal form is

    z1 -> lam z1
    z2 -> lam^2 z2 + D z1^2
    z3 -> lam^4 z3 + A z2^2 + B z1^2 z2 + C z1^4

and the candidate surfaces tangent to Re z3 = 0 are

    z3 + conj z3 = a z1^4 + b z1^3 zb1 + c |z1|^4 + d z1^2 z2 + e z1^2 zb2
                   + f |z1|^2 z2 + g z2^2 + h |z2|^2 + conjugates

with c, h real.
"""

from __future__ import annotations

from fractions import Fraction

from .hypersurface import HypersurfaceModel
from .modelgeom import FormalCurve
from .polyring import GaussRat, JetMap, MonoKey, RealPoly
from .spectrum import Spectrum

#: representative monomial of each named coefficient (the swapped key carries the conjugate)
NAMED_KEYS = {
    "a": MonoKey((4, 0, 0), (0, 0, 0)),
    "b": MonoKey((3, 0, 0), (1, 0, 0)),
    "c": MonoKey((2, 0, 0), (2, 0, 0)),
    "d": MonoKey((2, 1, 0), (0, 0, 0)),
    "e": MonoKey((2, 0, 0), (0, 1, 0)),
    "f": MonoKey((1, 1, 0), (1, 0, 0)),
    "g": MonoKey((0, 2, 0), (0, 0, 0)),
    "h": MonoKey((0, 1, 0), (0, 1, 0)),
}


def spectrum(lam=Fraction(1, 2)) -> Spectrum:
    return Spectrum.power(lam, (1, 2, 4))


def contraction(A=0, B=0, C=0, D=0, lam=Fraction(1, 2)) -> JetMap:
    lam = Fraction(lam)

    def mono(hol, c):
        return RealPoly.monomial(3, hol, coeff=c)

    comps = [
        mono((1, 0, 0), lam),
        mono((0, 1, 0), lam ** 2) + mono((2, 0, 0), D),
        mono((0, 0, 1), lam ** 4) + mono((0, 2, 0), A) + mono((2, 1, 0), B) + mono((4, 0, 0), C),
    ]
    return JetMap(comps, 4)


def model(lam=Fraction(1, 2), **named) -> HypersurfaceModel:
    values = {NAMED_KEYS[name]: GaussRat.coerce(v) for name, v in named.items()}
    return HypersurfaceModel.from_pairs(spectrum(lam), 3, values)


def named_coefficients(M: HypersurfaceModel) -> dict:
    return {name: M.coefficients.get(key, GaussRat(0)) for name, key in NAMED_KEYS.items()}


def solved_instance():
    """lam = 1/2, D = 1, A = 0, B = 1/2, C = 5/4 with d = g = 1, e = i."""
    s = spectrum()
    f = contraction(A=0, B=Fraction(1, 2), C=Fraction(5, 4), D=1)
    M = model(d=1, g=1, e=GaussRat(0, 1))
    curve = FormalCurve.monomial([0, 1, 1], [1, 1, 2])
    return s, f, M, curve


DEMOS = {
    "three-block": lambda: solved_instance(),
    "three-block-free": lambda: (spectrum(), contraction(), None, None),
    "three-block-obstructed": lambda: (spectrum(), contraction(A=1, B=Fraction(1, 2), C=Fraction(5, 4), D=1), None, None),
}
