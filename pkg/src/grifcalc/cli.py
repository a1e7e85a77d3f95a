"""Command-line interface.

Subcommands: jring (graded Jacobian-ring queries), hodge (primitive
Hodge numbers and Euler characteristics), fermat (character census),
nl (socle pairing matrix, determinant, invariant values, independence),
kermu (kernel-spanning verification), independence (alias for
nl independence), report (the full check sequence).

Exit codes: 0 success, 1 a computation ran and the verified property
failed, 2 usage or domain error.  run_command returns (exit_code,
output) without printing; main prints and exits.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import time
from fractions import Fraction

from ._version import __version__
from .cache import Cache
from .characters import (Character, enumerate_type, galois_orbit,
                         orbit_partition, rational_class)
from .errors import GrifcalcError
from .hodge import CIData, ci_prim_hodge, euler_characteristic, \
    hypersurface_prim_hodge
from .invariant import (delta_nu, independence_rank, iso_det, iso_matrix,
                        distinguished_triple)
from .jacobian import (HomogeneousPolynomial, HypersurfaceRing,
                       monomial_string, pairing_matrix)
from .linalg import DEFAULT_PRIME
from .mulkernel import span_equals_kernel
from .report import DETERMINANT_FACTORED, ReportOptions, full_report
from .scalar import parse as parse_scalar, scalar_to_string


class UsageError(Exception):
    pass


class _HelpExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status == 0:
            raise _HelpExit()
        raise UsageError(message or "exit %d" % status)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _degree_list(text):
    try:
        degrees = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")
    if not degrees or any(d < 1 for d in degrees):
        raise argparse.ArgumentTypeError("degrees must be positive")
    return degrees


def _type_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected p,q")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers p,q")


def _pair_list(text):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError("expected a;-separated list of a,b pairs")
        try:
            pairs.append((Fraction(parts[0]), Fraction(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError("pair entries must be rational numbers")
    if not pairs:
        raise argparse.ArgumentTypeError("no pairs given")
    return tuple(pairs)


def _fraction(text):
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a rational number")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help="result cache directory")
    common.add_argument("--modp", type=_positive_int, default=DEFAULT_PRIME,
                        metavar="P", help="prime for modular rank checks")
    common.add_argument("--exact", action="store_true",
                        help="force exact rational arithmetic")
    common.add_argument("--seed", type=_nonneg_int, default=0,
                        help="seed for randomized specializations")

    top = _Parser(prog="grifcalc",
                  description="exact verification of cubic sevenfold computations")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    jring = sub.add_parser("jring", parents=[common],
                           help="graded Jacobian ring queries")
    jsub = jring.add_subparsers(dest="action", required=True)
    jb = jsub.add_parser("basis", parents=[common])
    jb.add_argument("--vars", type=_positive_int, required=True)
    jb.add_argument("--degree", type=_positive_int, required=True,
                    help="degree of the Fermat form")
    jb.add_argument("--k", type=_nonneg_int, required=True,
                    help="graded slice to enumerate")
    jn = jsub.add_parser("nf", parents=[common])
    jn.add_argument("--vars", type=_positive_int, required=True)
    jn.add_argument("--degree", type=_positive_int, required=True)
    jn.add_argument("--poly", required=True,
                    help="polynomial as JSON {nvars, degree, terms}")
    jp = jsub.add_parser("pairing", parents=[common])
    jp.add_argument("--vars", type=_positive_int, required=True)
    jp.add_argument("--degree", type=_positive_int, required=True)
    jp.add_argument("--poly", required=True)
    jp.add_argument("--j", type=_nonneg_int, required=True)
    jp.add_argument("--k", type=_nonneg_int, required=True)

    hodge = sub.add_parser("hodge", parents=[common],
                           help="Hodge numbers and Euler characteristics")
    hsub = hodge.add_subparsers(dest="action", required=True)
    hh = hsub.add_parser("hypersurface", parents=[common])
    hh.add_argument("--degree", type=_positive_int, required=True)
    hh.add_argument("--dim", type=_positive_int, required=True)
    hc = hsub.add_parser("ci", parents=[common])
    hc.add_argument("--degrees", type=_degree_list, required=True)
    hc.add_argument("--dim", type=_nonneg_int, required=True)

    fermat = sub.add_parser("fermat", parents=[common],
                            help="character census for Fermat hypersurfaces")
    fsub = fermat.add_subparsers(dest="action", required=True)
    fc = fsub.add_parser("classes", parents=[common])
    fc.add_argument("--degree", type=_positive_int, required=True)
    fc.add_argument("--vars", type=_positive_int, required=True)
    fc.add_argument("--type", type=_type_pair, required=True, dest="ptype")
    fc.add_argument("--orbits", action="store_true",
                    help="group characters into Galois orbits with classes")

    nl = sub.add_parser("nl", parents=[common],
                        help="socle pairing and invariant values")
    nsub = nl.add_subparsers(dest="action", required=True)
    for name in ("matrix", "det", "deltanu"):
        p = nsub.add_parser(name, parents=[common])
        p.add_argument("--a", type=_fraction, default=None)
        p.add_argument("--b", type=_fraction, default=None)
        p.add_argument("--symbolic", action="store_true",
                       help="keep a, b as indeterminates")
    ni = nsub.add_parser("independence", parents=[common])
    ni.add_argument("--pairs", type=_pair_list, required=True,
                    metavar="A1,B1;A2,B2;...")

    kermu = sub.add_parser("kermu", parents=[common],
                           help="kernel-spanning verification for mu")
    ksub = kermu.add_subparsers(dest="action", required=True)
    kv = ksub.add_parser("verify", parents=[common])
    kv.add_argument("--vars", type=_positive_int, required=True)
    kv.add_argument("--method", choices=("span", "standardize"),
                    default="span")

    indep = sub.add_parser("independence", parents=[common],
                           help="alias for nl independence")
    indep.add_argument("--pairs", type=_pair_list, required=True)

    rep = sub.add_parser("report", parents=[common],
                         help="run the full check sequence")
    rep.add_argument("--kermu-vars", type=_positive_int, default=6)
    rep.add_argument("--skip", action="append", default=[],
                     metavar="GROUP", help="skip checks by id or group")
    rep.add_argument("--stable", action="store_true",
                     help="zero out timings for reproducible output")
    rep.add_argument("--pairs", type=_pair_list, default=None)

    return top


def _triple_from_args(args):
    if args.symbolic or (args.a is None and args.b is None):
        return distinguished_triple()
    a = args.a if args.a is not None else Fraction(1)
    b = args.b if args.b is not None else Fraction(1)
    return distinguished_triple(a, b)


def _cmd_jring(args):
    ring = HypersurfaceRing.fermat(args.degree, getattr(args, "vars"))
    if args.action == "basis":
        basis = ring.quotient_basis(args.k)
        payload = {"dimension": basis.dimension,
                   "monomials": [monomial_string(e) for e in basis.basis]}
        if args.json:
            return 0, _dump(payload)
        lines = ["dimension %d" % basis.dimension]
        lines.extend(payload["monomials"])
        return 0, "\n".join(lines)
    poly = HomogeneousPolynomial.from_json(json.loads(args.poly))
    if args.action == "nf":
        result = ring.normal_form(poly)
        return 0, _dump(result.to_json()) if args.json else str(result)
    matrix = pairing_matrix(ring, poly, args.j, args.k)
    payload = matrix.to_json()
    if args.json:
        return 0, _dump(payload)
    lines = ["%d x %d" % (payload["rows"], payload["cols"])]
    for i, j, v in payload["entries"]:
        lines.append("(%d, %d) = %s" % (i, j, v))
    return 0, "\n".join(lines)


def _cmd_hodge(args):
    if args.action == "hypersurface":
        hv = hypersurface_prim_hodge(args.degree, args.dim)
        if args.json:
            return 0, _dump({"prim": hv.to_json()})
        return 0, "primitive middle Hodge numbers: %s" % (list(hv.values),)
    ci = CIData(args.degrees, args.dim)
    hv = ci_prim_hodge(ci)
    chi = euler_characteristic(ci)
    if args.json:
        return 0, _dump({"prim": hv.to_json(), "euler": chi})
    return 0, ("primitive middle Hodge numbers: %s\neuler characteristic: %d"
               % (list(hv.values), chi))


def _cmd_fermat(args):
    if args.degree < 3:
        raise UsageError("character census needs degree >= 3")
    chars = enumerate_type(args.degree, getattr(args, "vars"), args.ptype)
    if not args.orbits:
        payload = {"character_count": len(chars),
                   "characters": [list(c.entries) for c in chars]}
        if args.json:
            return 0, _dump(payload)
        lines = ["%d characters of type (%d, %d)"
                 % (len(chars), args.ptype[0], args.ptype[1])]
        lines.extend(str(list(c.entries)) for c in chars)
        return 0, "\n".join(lines)
    orbits = orbit_partition(chars)
    described = []
    for orb in orbits:
        entry = {"members": [list(c.entries) for c in orb.members]}
        try:
            entry["class"] = str(rational_class(orb))
        except GrifcalcError:
            entry["class"] = None  # orbit mixes cohomological degrees
        described.append(entry)
    payload = {"character_count": len(chars), "orbit_count": len(orbits),
               "orbits": described}
    if args.json:
        return 0, _dump(payload)
    lines = ["%d characters in %d orbits" % (len(chars), len(orbits))]
    for entry in described:
        lines.append("%s  ~  %s" % (entry["members"], entry["class"]))
    return 0, "\n".join(lines)


def _cmd_nl(args):
    if args.action == "independence":
        rank, relations = independence_rank(args.pairs)
        payload = {
            "pairs": [[str(a), str(b)] for a, b in args.pairs],
            "rank": rank,
            "relations": [[str(c) for c in rel] for rel in relations],
        }
        if args.json:
            return 0, _dump(payload)
        lines = ["rank %d of %d values" % (rank, len(args.pairs))]
        for rel in relations:
            lines.append("relation: " + ", ".join(str(c) for c in rel))
        return 0, "\n".join(lines)

    triple = _triple_from_args(args)
    if args.action == "matrix":
        matrix = iso_matrix(triple)
        payload = matrix.to_json()
        if args.json:
            return 0, _dump(payload)
        lines = ["%d x %d pairing matrix, %d nonzero entries"
                 % (payload["rows"], payload["cols"], len(payload["entries"]))]
        for i, j, v in payload["entries"]:
            lines.append("(%d, %d) = %s" % (i, j, v))
        return 0, "\n".join(lines)
    if args.action == "det":
        _, det = iso_det(triple)
        if args.symbolic:
            if det != parse_scalar(DETERMINANT_FACTORED):
                return 1, ("determinant %s does not match the factored form %s"
                           % (scalar_to_string(det), DETERMINANT_FACTORED))
            out = DETERMINANT_FACTORED
        else:
            out = scalar_to_string(det)
        return 0, _dump({"det": out}) if args.json else out
    # deltanu
    from .report import _invariant_tensor
    value = delta_nu(triple, _invariant_tensor())
    out = scalar_to_string(value)
    return 0, _dump({"value": out}) if args.json else out


def _cmd_kermu(args):
    nvars = getattr(args, "vars")
    mode = "span_rank" if args.method == "span" else "standardize"
    exact = args.exact or nvars <= 7
    prime = None if (exact or mode == "standardize") else args.modp
    # --cache beats GRIFCALC_CACHE beats .grifcalc-cache/
    cache = Cache(args.cache)
    params = {"nvars": nvars, "mode": mode, "exact": exact, "prime": prime}
    payload = cache.get("kermu." + mode, params)
    start = time.perf_counter()
    if payload is None:
        payload = span_equals_kernel(nvars, mode=mode, prime=prime,
                                     exact=exact).to_json()
        cache.put("kermu." + mode, params, payload)
    elapsed = round(time.perf_counter() - start, 6)
    verdict = bool(payload["verdict"])
    out = dict(payload)
    out["elapsed"] = elapsed
    code = 0 if verdict else 1
    if args.json:
        return code, _dump(out)
    lines = ["mu: R3 x R3 -> R6 with %d variables" % nvars,
             "dim R3 = %d, dim R6 = %d, kernel dimension %d"
             % (out["dim_r3"], out["dim_r6"], out["kernel_dim"]),
             "mode %s, verdict %s, %.3fs" % (mode, verdict, elapsed)]
    if out.get("certificate_moves") is not None:
        lines.append("standardized %d vectors with %d certificate moves"
                     % (out["standardized_vectors"], out["certificate_moves"]))
    return code, "\n".join(lines)


def _cmd_report(args):
    cache = Cache(args.cache)
    options = ReportOptions(
        kermu_vars=args.kermu_vars,
        pairs=args.pairs if args.pairs is not None else
        tuple((Fraction(a), Fraction(1)) for a in range(1, 9)),
        seed=args.seed,
        modp=args.modp,
        exact=args.exact,
        skip=tuple(args.skip),
        stable=args.stable,
        cache=cache,
    )
    doc = full_report(options)
    code = 1 if doc.failed else 0
    if args.json:
        return code, _dump(doc.to_json())
    width = max(len(c.check_id) for c in doc.checks)
    lines = ["grifcalc %s" % doc.tool_version]
    for c in doc.checks:
        lines.append("%-*s  %s" % (width, c.check_id, c.status.upper()))
    lines.append("overall: %s" % ("FAIL" if doc.failed else "OK"))
    return code, "\n".join(lines)


_DISPATCH = {
    "jring": _cmd_jring,
    "hodge": _cmd_hodge,
    "fermat": _cmd_fermat,
    "nl": _cmd_nl,
    "kermu": _cmd_kermu,
    "report": _cmd_report,
}


def run_command(argv):
    """Parse and execute; returns (exit_code, output text)."""
    parser = _build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            args = parser.parse_args(argv)
            if args.command == "independence":
                args.action = "independence"
                args.symbolic = False
                return _cmd_nl(args)
            return _DISPATCH[args.command](args)
    except _HelpExit:
        return 0, buf.getvalue().rstrip("\n")
    except UsageError as exc:
        return 2, "error: %s" % exc
    except GrifcalcError as exc:
        return 2, "error: %s" % exc
    except (ValueError, OverflowError) as exc:
        return 2, "error: %s" % exc


def main(argv=None):
    import sys
    code, output = run_command(sys.argv[1:] if argv is None else argv)
    if output:
        print(output)
    raise SystemExit(code)
