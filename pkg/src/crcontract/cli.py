"""Command-line batch interface.

Every command reads one JSON document (file path, ``-`` for stdin, or a
built-in ``--demo``) holding any of ``spectrum``, ``jet``, ``model`` and
``curve``; spectrum-only commands also accept a bare spectrum object.
Output is exact JSON (default) or a short text report.

Exit status: 0 on success (an Inconsistent solve is a result, not an
error), 2 on schema violations, 3 on failed preconditions.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Dict, Optional

from . import fixtures, wire
from .hypersurface import HypersurfaceError, hermitian_report, solve_invariant_surfaces, verify_invariance
from .modelgeom import curve_membership, homogeneity_weights, monomial_curve_search
from .normalform import NormalFormError, normalize
from .spectrum import (
    SpectrumError,
    admissible_tangent_indices,
    degree_bound,
    extended_resonances,
    resonances,
)

EXIT_SCHEMA = 2
EXIT_PRECONDITION = 3

COMMANDS = ("resonances", "ext-resonances", "tangent-indices", "normalize", "invariant-solve",
            "verify", "weights", "curve-check", "curve-search", "report")


class PreconditionError(ValueError):
    pass


class Job:
    """Parsed input document for one command."""

    def __init__(self, doc: Dict[str, Any], demo: Optional[str] = None):
        self.doc = doc
        self.demo = demo
        if demo is not None:
            s, f, M, curve = fixtures.DEMOS[demo]()
            self.spectrum, self.jet, self.model, self.curve = s, f, M, curve
            return
        if isinstance(doc, dict) and "mode" in doc:
            self.spectrum = wire.spectrum_from_json(doc, "$")
            self.jet = self.model = self.curve = None
            return
        wire._keys(doc, "$", ("spectrum",), ("jet", "model", "curve"))
        self.spectrum = wire.spectrum_from_json(doc["spectrum"], "$.spectrum")
        s = self.spectrum
        self.jet = wire.jet_from_json(doc["jet"], s.block_dims, "$.jet") if "jet" in doc else None
        self.model = wire.model_from_json(doc["model"], s, "$.model") if "model" in doc else None
        self.curve = wire.curve_from_json(doc["curve"], s.n, "$.curve") if "curve" in doc else None

    def need(self, field: str):
        value = getattr(self, field)
        if value is None:
            raise wire.SchemaError(f"$.{field}", "missing required field for this command")
        return value


def _nu(args, s) -> int:
    if args.nu is None:
        raise wire.SchemaError("--nu", "required for this command")
    s.check_nu(args.nu)
    return args.nu


def _tangent(args, job: Job) -> int:
    if args.i is not None:
        return args.i
    if job.model is not None:
        return job.model.tangent_index
    raise wire.SchemaError("--i", "required for this command")


def run_command(args, job: Job) -> Dict[str, Any]:
    s = job.spectrum
    out: Dict[str, Any] = {"command": args.command, "spectrum": wire.spectrum_to_json(s)}
    cmd = args.command

    if cmd == "resonances":
        nu = _nu(args, s)
        out.update(nu=nu, degree_bound=degree_bound(s), resonances=[list(I) for I in resonances(s, nu)])
    elif cmd == "ext-resonances":
        nu = _nu(args, s)
        keys = extended_resonances(s, nu)
        out.update(nu=nu, degree_bound=degree_bound(s), count=len(keys),
                   extended_resonances=[{"I": list(I), "Iprime": list(Ip)} for I, Ip in keys])
    elif cmd == "tangent-indices":
        out.update(admissible=admissible_tangent_indices(s))
    elif cmd == "normalize":
        res = normalize(job.need("jet"), s, args.order)
        if not res.residual_zero:
            raise AssertionError("normalization residual is nonzero")
        out.update(wire.normalization_to_json(res))
    elif cmd == "invariant-solve":
        i = _tangent(args, job)
        space = solve_invariant_surfaces(job.need("jet"), s, i)
        out.update(tangent_index=i, truncation_order=job.jet.order)
        out.update(wire.solution_space_to_json(space))
    elif cmd == "verify":
        M = job.need("model")
        res = verify_invariance(job.need("jet"), M, args.order)
        out.update(tangent_index=M.tangent_index, truncation_order=args.order,
                   residual=wire.residual_to_json(res))
    elif cmd == "weights":
        M = job.need("model")
        out.update(tangent_index=M.tangent_index, weights=wire.weights_to_json(homogeneity_weights(M)))
    elif cmd == "curve-check":
        M, phi = job.need("model"), job.need("curve")
        res = curve_membership(M, phi, args.order)
        out.update(tangent_index=M.tangent_index, truncation_order=args.order,
                   residual=wire.residual_to_json(res))
    elif cmd == "curve-search":
        M = job.need("model")
        curves = monomial_curve_search(M, args.dmax)
        out.update(tangent_index=M.tangent_index, dmax=args.dmax,
                   curves=[wire.curve_to_json(c) for c in curves])
        if not curves:
            out["note"] = f"no curve found up to degree {args.dmax}"
    elif cmd == "report":
        i = _tangent(args, job)
        if job.model is not None and args.i is None:
            rep = hermitian_report(job.model, s, i)
        else:
            space = solve_invariant_surfaces(job.need("jet"), s, i)
            if not space.solvable:
                out.update(tangent_index=i, status=space.status)
                return out
            rep = hermitian_report(space, s, i)
        out.update(tangent_index=i)
        out.update(wire.hermitian_report_to_json(rep))
    return out


def render_text(out: Dict[str, Any]) -> str:
    lines = []
    for key, value in out.items():
        if isinstance(value, list) and value and not isinstance(value[0], (int, str)):
            lines.append(f"{key}:")
            for item in value:
                lines.append(f"  {_compact(item)}")
        else:
            lines.append(f"{key}: {_compact(value)}")
    return "\n".join(lines) + "\n"


def _compact(value) -> str:
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return value["re"] if value["im"] == "0" else f"{value['re']}+{value['im']}i"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_compact(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_compact(v) for v in value) + "]"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crcontract", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="JSON input file, or - for stdin")
    p.add_argument("--demo", choices=sorted(fixtures.DEMOS), help="use a built-in input instead of a file")
    p.add_argument("--nu", type=int, help="block index for resonance commands (1-based)")
    p.add_argument("--i", type=int, help="tangent block index (1-based)")
    p.add_argument("--order", type=int, help="truncation order k")
    p.add_argument("--dmax", type=int, default=4, help="degree bound for curve-search")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SCHEMA if exc.code else 0
    try:
        if args.demo is not None:
            job = Job({}, args.demo)
        else:
            text = stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
            job = Job(wire.loads(text))
        out = run_command(args, job)
    except wire.SchemaError as exc:
        print(f"schema error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except (SpectrumError, HypersurfaceError, NormalFormError, PreconditionError, ValueError) as exc:
        print(f"precondition failed: {exc}", file=stderr)
        return EXIT_PRECONDITION
    if args.format == "text":
        text = render_text(out)
        width = os.environ.get("CRCONTRACT_WIDTH")
        if width and width.isdigit():
            text = "\n".join(line[: int(width)] for line in text.splitlines()) + "\n"
        stdout.write(text)
    else:
        stdout.write(wire.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
