"""Command-line front end: ``embcomp COMMAND PROBLEM.json [options]``.

Every command prints one JSON document on standard output.  Exit status is 0
when a result was produced, 2 when a budget ran out before a verdict and 1 on
errors (bad input, failed preconditions).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .colon import ideal_membership
from .deflation import deflate
from .dual import LocalDual, as_coords
from .embedded import _mono_str, ideal_truncation, is_point_embedded, slice_suspect
from .errors import EmbcompError, InconclusiveError
from .interpolation import dual_dims_of_truncated_ideal, interpolate_isolated
from .oracle import OracleHandle
from .parse import parse_polynomial
from .poly import Polynomial
from .problem import complex_to_json, load_problem, parse_complex_vector
from .staircase import gcorners, hilbert_values, monomial_stats

log = logging.getLogger("embcomp")

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _cnum(z, tol=1e-12):
    re, im = complex_to_json(z)
    return [0.0 if abs(re) < tol else re, 0.0 if abs(im) < tol else im]


def _functional_json(row, monos, names, tol=1e-10):
    scale = max(np.max(np.abs(row)), 1.0)
    return [[_mono_str(a, names), _cnum(c)] for a, c in zip(monos, row) if abs(c) > tol * scale]


def _poly_json(p):
    return p.chop().to_string()


def _echelon_json(T, shift=None):
    """Basis with unit coefficients on distinct initial terms."""
    rows, _ = T.reduced()
    out = []
    for row in rows:
        p = Polynomial(T.ring, dict(zip(T.monomials, row)))
        out.append(_poly_json(p if shift is None else p.shift(shift)))
    return out


def _basepoint(problem, args):
    if getattr(args, "point", None):
        y = parse_complex_vector(json.loads(args.point))
    elif getattr(args, "suspect", None) is not None:
        y = _suspect_point(problem, args.suspect)
    elif "point" in problem.extra:
        y = parse_complex_vector(problem.extra["point"])
    else:
        y = np.zeros(problem.ring.nvars, dtype=complex)
    if y.size != problem.ring.nvars:
        raise EmbcompError(f"point has {y.size} coordinates, ring has {problem.ring.nvars}")
    return y


def _suspect_point(problem, idx):
    try:
        s = problem.suspects[idx]
    except IndexError:
        raise EmbcompError(f"no suspect with index {idx}") from None
    if s.point is None:
        raise EmbcompError(f"suspect {idx} has no point")
    return s.point


def _oracle(problem, rng=None):
    return OracleHandle(problem.components, problem.generators, problem.config, rng)


def cmd_dual(problem, args):
    y = _basepoint(problem, args)
    L = LocalDual(problem.generators, y, problem.config)
    B = L.basis(args.order)
    names = problem.ring.names
    return {
        "point": [_cnum(z) for z in y],
        "dims": L.dims(args.order),
        "basis": [_functional_json(row, B.monomials, names) for row in B.coeffs],
    }


def cmd_hilbert(problem, args):
    y = _basepoint(problem, args)
    return {
        "point": [_cnum(z) for z in y],
        "hilbert_function": hilbert_values(problem.generators, y, args.order, problem.config),
    }


def cmd_corners(problem, args):
    y = _basepoint(problem, args)
    st = gcorners(problem.generators, y, problem.config)
    stats = monomial_stats(st.ideal)
    stats.regularity_is_lower_bound = not st.certified
    names = problem.ring.names
    out = {
        "point": [_cnum(z) for z in y],
        "gcorners": [_mono_str(a, names) for a in st.gcorners],
        "certified": st.certified,
        "dimension": stats.dimension,
        "regularity": stats.regularity,
        "regularity_is_lower_bound": stats.regularity_is_lower_bound,
        "multiplicity": stats.multiplicity,
        "hilbert_function": stats.values,
    }
    if stats.dimension == 0:
        out["scorners"] = [_mono_str(a, names) for a in st.ideal.scorners()]
    else:
        out["hilbert_polynomial"] = [str(c) for c in stats.hp_coefficients]
    return out


def cmd_member(problem, args):
    texts = args.poly or problem.extra.get("member", [])
    if isinstance(texts, str):
        texts = [texts]
    if not texts:
        raise EmbcompError("nothing to test: pass --poly or add a 'member' list to the problem file")
    y = _basepoint(problem, args)
    results = []
    for t in texts:
        g = parse_polynomial(t, problem.ring)
        results.append({"poly": t, "member": ideal_membership(problem.generators, g, problem.config, y)})
    return {"point": [_cnum(z) for z in y], "results": results}


def cmd_truncate(problem, args):
    y = _suspect_point(problem, args.suspect)
    h = _oracle(problem).translated(y)
    h = h.with_components([c for c in h.containing(np.zeros(y.size)) if c.effective_dim > 0])
    Ft = [f.shift(y) for f in problem.generators]
    T = ideal_truncation(Ft, h.with_components(h.components, Ft), args.degree, problem.config)
    return {
        "point": [_cnum(z) for z in y],
        "d": T.d,
        "e": T.e,
        "certified": T.certified,
        "dim": T.dim,
        "basis": _echelon_json(T, -y),
    }


def _run_suspect(problem, idx, seed):
    s = problem.suspects[idx]
    rng = np.random.default_rng(seed)
    h = OracleHandle(problem.components, problem.generators, problem.config, rng, validate=False)
    entry = {"suspect": s.label, "dim": s.dim}
    try:
        if s.dim > 0:
            Fs, p, hs = slice_suspect(problem.generators, s.component, h, problem.config)
            v = is_point_embedded(Fs, p, hs, problem.config)
            entry["sliced"] = True
            if not v.verdict:
                v.notes.append("false for the slice through the reported point")
        else:
            v = is_point_embedded(problem.generators, s.point, h, problem.config)
        entry["status"] = "ok"
        entry.update(v.to_json(problem.ring.names))
    except InconclusiveError as exc:
        entry.update(status="inconclusive", message=str(exc))
    except EmbcompError as exc:
        entry.update(status="error", message=str(exc))
    return entry


def _suspect_job(payload):
    path, overrides, idx, seed = payload
    problem = _load(path, overrides)
    return _run_suspect(problem, idx, seed)


def cmd_embedded(problem, args):
    if not problem.suspects:
        raise EmbcompError("problem file lists no suspects")
    _oracle(problem)  # validates the fixtures once
    seqs = np.random.SeedSequence(problem.config.seed).spawn(len(problem.suspects))
    seeds = [int(s.generate_state(1)[0]) for s in seqs]
    if args.jobs > 1:
        payloads = [(args.problem, _overrides(args), k, seeds[k]) for k in range(len(seeds))]
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_suspect_job, payloads))
    else:
        results = []
        for k, seed in enumerate(seeds):
            log.info("suspect %d of %d", k + 1, len(seeds))
            results.append(_run_suspect(problem, k, seed))
    return {"suspects": results}


def cmd_deflate(problem, args):
    system = deflate(problem.generators, args.degree)
    return {"variables": list(system.ring.names), "generators": system.to_strings()}


def cmd_interpolate(problem, args):
    h = _oracle(problem)
    T = interpolate_isolated(h, args.component, args.e, problem.config)
    out = {
        "component": args.component,
        "e": args.e,
        "dim": T.dim,
        "basis": _echelon_json(T),
    }
    if args.dual_order is not None:
        y = _basepoint(problem, args)
        out["dual_dims"] = dual_dims_of_truncated_ideal(T, y, args.dual_order, problem.config)
    return out


COMMANDS = {
    "dual": cmd_dual,
    "hilbert": cmd_hilbert,
    "corners": cmd_corners,
    "member": cmd_member,
    "truncate": cmd_truncate,
    "embedded": cmd_embedded,
    "deflate": cmd_deflate,
    "interpolate": cmd_interpolate,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file (JSON)")
    common.add_argument("--delta", type=float, help="rank threshold")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--max-degree", type=int, help="degree budget for dual spaces")
    common.add_argument("--quiet", action="store_true", help="no progress messages on stderr")

    at = argparse.ArgumentParser(add_help=False)
    at.add_argument("--point", help='basepoint as JSON, e.g. "[[0,0],[1,0]]"')
    at.add_argument("--suspect", type=int, help="use the point of this suspect")

    parser = argparse.ArgumentParser(prog="embcomp", description="Embedded component tests for polynomial systems.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("dual", parents=[common, at], help="truncated dual space")
    p.add_argument("--order", "-k", type=int, default=4)
    p = sub.add_parser("hilbert", parents=[common, at], help="local Hilbert function")
    p.add_argument("--order", "-k", type=int, default=6)
    sub.add_parser("corners", parents=[common, at], help="g-corners, s-corners, regularity, multiplicity")
    p = sub.add_parser("member", parents=[common, at], help="ideal membership in the local ring")
    p.add_argument("--poly", action="append", help="polynomial to test (repeatable)")
    p = sub.add_parser("truncate", parents=[common], help="degree-d part of the components through a suspect")
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--suspect", type=int, default=0)
    p = sub.add_parser("embedded", parents=[common], help="verdict for every suspect")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p = sub.add_parser("deflate", parents=[common], help="order-d deflation system")
    p.add_argument("--degree", "-d", type=int, required=True)
    p = sub.add_parser("interpolate", parents=[common, at], help="low-degree part of an isolated component")
    p.add_argument("--component", required=True)
    p.add_argument("-e", type=int, required=True)
    p.add_argument("--dual-order", type=int, help="also report dual dims of the result up to this order")
    return parser


def _overrides(args):
    return {"delta": args.delta, "seed": args.seed, "max_degree": args.max_degree}


def _load(path, overrides):
    problem = load_problem(path)
    problem.config = problem.config.replace(**overrides)
    return problem


def _exit_code(command, result):
    if command == "embedded":
        status = {r["status"] for r in result["suspects"]}
        if "error" in status:
            return EXIT_ERROR
        if "inconclusive" in status:
            return EXIT_INCONCLUSIVE
    return EXIT_OK


def run(argv=None, stdout=None):
    """Run a command; returns the exit status."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        problem = _load(args.problem, _overrides(args))
        result = COMMANDS[args.command](problem, args)
        code = _exit_code(args.command, result)
    except InconclusiveError as exc:
        result, code = {"status": "inconclusive", "message": str(exc)}, EXIT_INCONCLUSIVE
    except (EmbcompError, OSError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        result, code = {"status": "error", "message": msg}, EXIT_ERROR
        if not args.quiet:
            log.error("%s", msg)
    json.dump(result, stdout, indent=2)
    stdout.write("\n")
    return code


def main():
    sys.exit(run())
