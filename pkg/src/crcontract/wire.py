"""Exact JSON wire format shared by every command.

Numbers travel as strings ("p/q", or "p" when q == 1); floats are rejected.
Parsers are strict: unknown or missing fields raise SchemaError naming the
offending path.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .hypersurface import HermitianReport, HypersurfaceModel, SolutionSpace
from .modelgeom import FormalCurve, WeightVector
from .normalform import NormalizationResult
from .polyring import GaussRat, JetMap, MonoKey, RealPoly
from .spectrum import EXACT, POWER, Spectrum

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _keys(obj, path: str, required: Sequence[str], optional: Sequence[str] = ()) -> Dict[str, Any]:
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise SchemaError(f"{path}.{unknown[0]}", "unknown field")
    for k in required:
        if k not in obj:
            raise SchemaError(f"{path}.{k}", "missing required field")
    return obj


def _list(obj, path: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(path, f"expected an array, got {type(obj).__name__}")
    return obj


def _int(obj, path: str, minimum: Optional[int] = None) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(path, f"expected an integer, got {obj!r}")
    if minimum is not None and obj < minimum:
        raise SchemaError(path, f"must be >= {minimum}")
    return obj


def _int_list(obj, path: str, length: Optional[int] = None, minimum: int = 0) -> List[int]:
    items = _list(obj, path)
    if length is not None and len(items) != length:
        raise SchemaError(path, f"expected {length} entries, got {len(items)}")
    return [_int(x, f"{path}[{j}]", minimum) for j, x in enumerate(items)]


# -- scalars ------------------------------------------------------------------

def rational_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from_str(s, path: str = "$") -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise SchemaError(path, f"expected an exact rational string 'p/q', got {s!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise SchemaError(path, "zero denominator")
    return Fraction(s)


def gauss_to_json(c: GaussRat) -> Dict[str, str]:
    return {"re": rational_to_str(c.re), "im": rational_to_str(c.im)}


def gauss_from_json(obj, path: str = "$") -> GaussRat:
    _keys(obj, path, ("re", "im"))
    return GaussRat(rational_from_str(obj["re"], f"{path}.re"), rational_from_str(obj["im"], f"{path}.im"))


# -- polynomials ----------------------------------------------------------------

def poly_to_json(p: RealPoly) -> List[Dict[str, Any]]:
    return [{"hol": list(k.hol), "antihol": list(k.antihol), "coeff": gauss_to_json(c)} for k, c in p.terms.items()]


def poly_from_json(obj, nvars: int, blocks=None, path: str = "$") -> RealPoly:
    terms = {}
    for j, t in enumerate(_list(obj, path)):
        tp = f"{path}[{j}]"
        _keys(t, tp, ("hol", "antihol", "coeff"))
        key = MonoKey(tuple(_int_list(t["hol"], f"{tp}.hol", nvars)), tuple(_int_list(t["antihol"], f"{tp}.antihol", nvars)))
        if key in terms:
            raise SchemaError(tp, "duplicate monomial")
        terms[key] = gauss_from_json(t["coeff"], f"{tp}.coeff")
    return RealPoly(nvars, terms, blocks)


# -- spectrum -------------------------------------------------------------------

def spectrum_to_json(s: Spectrum) -> Dict[str, Any]:
    if s.mode == POWER:
        return {"mode": POWER, "base": rational_to_str(s.base), "exponents": list(s.exponents),
                "block_dims": list(s.block_dims)}
    return {"mode": EXACT, "values": [gauss_to_json(v) for v in s.values], "block_dims": list(s.block_dims)}


def spectrum_from_json(obj, path: str = "$") -> Spectrum:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    mode = obj.get("mode")
    if mode == POWER:
        _keys(obj, path, ("mode", "base", "exponents", "block_dims"))
        base = rational_from_str(obj["base"], f"{path}.base")
        exps = _int_list(obj["exponents"], f"{path}.exponents", minimum=1)
        dims = _int_list(obj["block_dims"], f"{path}.block_dims", len(exps), minimum=1)
        return Spectrum.power(base, exps, dims)
    if mode == EXACT:
        _keys(obj, path, ("mode", "values", "block_dims"))
        vals = [gauss_from_json(v, f"{path}.values[{j}]") for j, v in enumerate(_list(obj["values"], f"{path}.values"))]
        dims = _int_list(obj["block_dims"], f"{path}.block_dims", len(vals), minimum=1)
        return Spectrum.exact(vals, dims)
    raise SchemaError(f"{path}.mode", f"expected 'power' or 'exact', got {mode!r}")


# -- jets -------------------------------------------------------------------------

def jet_to_json(f: JetMap) -> Dict[str, Any]:
    comps = []
    for j in range(f.n):
        comps.append([{"exponents": list(k.hol), "coeff": gauss_to_json(c)} for k, c in f.nonlinear(j).terms.items()])
    return {"n": f.n, "order": f.order, "linear": [gauss_to_json(c) for c in f.linear], "components": comps}


def jet_from_json(obj, blocks=None, path: str = "$") -> JetMap:
    _keys(obj, path, ("n", "order", "linear", "components"))
    n = _int(obj["n"], f"{path}.n", 1)
    order = _int(obj["order"], f"{path}.order", 1)
    lin = [gauss_from_json(c, f"{path}.linear[{j}]") for j, c in enumerate(_list(obj["linear"], f"{path}.linear"))]
    if len(lin) != n:
        raise SchemaError(f"{path}.linear", f"expected {n} entries, got {len(lin)}")
    raw = _list(obj["components"], f"{path}.components")
    if len(raw) != n:
        raise SchemaError(f"{path}.components", f"expected {n} entries, got {len(raw)}")
    nonlinear = []
    for j, comp in enumerate(raw):
        cp = f"{path}.components[{j}]"
        terms = {}
        for t_idx, t in enumerate(_list(comp, cp)):
            tp = f"{cp}[{t_idx}]"
            _keys(t, tp, ("exponents", "coeff"))
            exps = tuple(_int_list(t["exponents"], f"{tp}.exponents", n))
            if sum(exps) < 2:
                raise SchemaError(f"{tp}.exponents", "components hold nonlinear terms only (degree >= 2)")
            if sum(exps) > order:
                raise SchemaError(f"{tp}.exponents", f"degree {sum(exps)} exceeds order {order}")
            key = MonoKey(exps, (0,) * n)
            if key in terms:
                raise SchemaError(tp, "duplicate monomial")
            terms[key] = gauss_from_json(t["coeff"], f"{tp}.coeff")
        nonlinear.append(RealPoly(n, terms, blocks))
    return JetMap.from_parts(lin, nonlinear, order, blocks)


# -- hypersurface ----------------------------------------------------------------

def model_to_json(M: HypersurfaceModel) -> Dict[str, Any]:
    return {"tangent_index": M.tangent_index,
            "terms": [{"I": list(k.hol), "Iprime": list(k.antihol), "coeff": gauss_to_json(c)}
                      for k, c in M.coefficients.items()]}


def model_from_json(obj, s: Spectrum, path: str = "$") -> HypersurfaceModel:
    _keys(obj, path, ("tangent_index", "terms"))
    i = _int(obj["tangent_index"], f"{path}.tangent_index", 1)
    coeffs = {}
    for j, t in enumerate(_list(obj["terms"], f"{path}.terms")):
        tp = f"{path}.terms[{j}]"
        _keys(t, tp, ("I", "Iprime", "coeff"))
        key = MonoKey(tuple(_int_list(t["I"], f"{tp}.I", s.n)), tuple(_int_list(t["Iprime"], f"{tp}.Iprime", s.n)))
        if key in coeffs:
            raise SchemaError(tp, "duplicate monomial")
        coeffs[key] = gauss_from_json(t["coeff"], f"{tp}.coeff")
    return HypersurfaceModel(s, i, coeffs)


def solution_space_to_json(space: SolutionSpace) -> Dict[str, Any]:
    if not space.solvable:
        return {"status": space.status}
    return {"status": space.status,
            "particular": model_to_json(space.particular),
            "kernel_basis": [model_to_json(v) for v in space.kernel_basis],
            "real_dimension": space.real_dimension}


def normalization_to_json(res: NormalizationResult) -> Dict[str, Any]:
    return {"normal_form": jet_to_json(res.normal_form), "conjugator": jet_to_json(res.conjugator),
            "order": res.order, "residual_zero": res.residual_zero}


def hermitian_report_to_json(rep: HermitianReport) -> Dict[str, Any]:
    return {"purely_quadratic": rep.purely_quadratic,
            "variables": [v + 1 for v in rep.variables],
            "hermitian_matrix": [[gauss_to_json(c) for c in row] for row in rep.matrix],
            "leading_minors": [rational_to_str(m) for m in rep.leading_minors],
            "signature": {"positive": rep.signature[0], "negative": rep.signature[1], "zero": rep.signature[2]},
            "label": rep.label}


# -- curves and weights ----------------------------------------------------------

def curve_to_json(phi: FormalCurve) -> Dict[str, Any]:
    return {"components": [[{"deg": d, "coeff": gauss_to_json(c)} for d, c in comp.items()]
                           for comp in phi.components]}


def curve_from_json(obj, n: Optional[int] = None, path: str = "$") -> FormalCurve:
    _keys(obj, path, ("components",))
    comps = []
    raw = _list(obj["components"], f"{path}.components")
    if n is not None and len(raw) != n:
        raise SchemaError(f"{path}.components", f"expected {n} entries, got {len(raw)}")
    for j, comp in enumerate(raw):
        cp = f"{path}.components[{j}]"
        terms = {}
        for t_idx, t in enumerate(_list(comp, cp)):
            tp = f"{cp}[{t_idx}]"
            _keys(t, tp, ("deg", "coeff"))
            d = _int(t["deg"], f"{tp}.deg", 1)
            if d in terms:
                raise SchemaError(tp, "duplicate degree")
            terms[d] = gauss_from_json(t["coeff"], f"{tp}.coeff")
        comps.append(terms)
    return FormalCurve(comps)


def weights_to_json(w: Optional[WeightVector]) -> Optional[Dict[str, Any]]:
    if w is None:
        return None
    return {"r": list(w.r), "target": w.target}


def weights_from_json(obj, path: str = "$") -> WeightVector:
    _keys(obj, path, ("r", "target"))
    r = _int_list(obj["r"], f"{path}.r", minimum=1)
    return WeightVector(tuple(r), _int(obj["target"], f"{path}.target", 1), tuple(range(len(r))))


def residual_to_json(p) -> Any:
    """"0" for the zero polynomial, otherwise the term list."""
    if isinstance(p, (tuple, list)):
        if not any(p):
            return "0"
        return [poly_to_json(c) for c in p]
    return "0" if not p else poly_to_json(p)


def _no_float(text):
    raise SchemaError("$", f"floating-point literal {text} is not allowed; use an exact string 'p/q'")


def loads(text: str):
    try:
        return json.loads(text, parse_float=_no_float)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
