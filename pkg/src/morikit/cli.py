"""Command-line front end: ``morikit <subcommand> [options]``.

Every payload is JSON with ``"schema": 1`` (or CSV with ``--format csv``).
Exact rationals and unbounded integers are written as decimal strings.
Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded, 64 unknown
subcommand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from .chambers import (
    eff_cone,
    fano_cone,
    flip_sequence,
    flip_type,
    locate_divisor,
    moving_curve_rays,
    mov_cone,
    ne_extremal_rays,
    nef_cone,
    walls,
)
from .cones import ResourceLimitExceeded, h_to_v
from .exact import fmt, fmt_vec, q
from .facts import facts
from .linsys import (
    LinearSystem,
    hilbert,
    hilbert_sigma_even,
    hilbert_sigma_odd,
    kumar_system,
)
from .picard import BlowupModel, DivisorClass, cremona_pushforward
from .weights import phi

SCHEMA = 1
EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_UNKNOWN = 64

# options whose values may start with "-" and must not be mistaken for flags
_VECTOR_OPTIONS = ("--divisor", "--base", "--system", "--b")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _rationals(text: str) -> tuple:
    parts = text.split(",")
    if not text or any(not p.strip() for p in parts):
        raise ValueError(f"malformed vector {text!r}")
    return tuple(q(p.strip()) for p in parts)


def _ints(text: str) -> tuple:
    vals = _rationals(text)
    if any(v.denominator != 1 for v in vals):
        raise ValueError(f"expected integers, got {text!r}")
    return tuple(int(v) for v in vals)


def _divisor(m: int, text: str) -> DivisorClass:
    v = _rationals(text)
    if len(v) < 2:
        raise ValueError("a divisor needs a degree and at least one exceptional coefficient")
    return DivisorClass.from_vector(BlowupModel(m, len(v) - 1), v)


def _blowup_divisor(m: int, text: str) -> DivisorClass:
    D = _divisor(m, text)
    if D.model.s != m + 2:
        raise ValueError(f"expected m+3 = {m + 3} coordinates for m = {m}, got {D.model.s + 1}")
    return D


def _cmd_cones(a):
    builders = {"eff": eff_cone, "mov": mov_cone, "nef": nef_cone, "fano": fano_cone}
    c = builders[a.which](a.m)
    payload = {"m": a.m, "which": a.which, "dim": c.dim, "normals": [fmt_vec(n) for n in c.normals]}
    rows = [{"kind": "normal", "vector": " ".join(fmt_vec(n))} for n in c.normals]
    if a.rays:
        v = h_to_v(c)
        payload["rays"] = [fmt_vec(r) for r in v.rays]
        payload["lineality"] = [fmt_vec(r) for r in v.lineality]
        rows += [{"kind": "ray", "vector": " ".join(fmt_vec(r))} for r in v.rays]
        rows += [{"kind": "lineality", "vector": " ".join(fmt_vec(r))} for r in v.lineality]
    return payload, rows


def _wall_row(w) -> dict:
    return {
        "k": w.k,
        "kind": w.kind,
        "I": " ".join(str(i) for i in w.I),
        "normal": " ".join(fmt_vec(w.normal)),
    }


def _cmd_locate(a):
    D = _blowup_divisor(a.m, a.divisor)
    rep = locate_divisor(D)
    payload = {"m": a.m, "divisor": fmt_vec(D.vector), **rep.to_json()}
    rows = [
        {"cone": name, "position": getattr(rep, f"in_{name}").position.value}
        for name in ("eff", "mov", "nef", "fano")
    ]
    return payload, rows


def _cmd_walls(a):
    ws = walls(a.m)
    payload = {
        "m": a.m,
        "count": len(ws),
        "walls": [{**w.label(), "normal": fmt_vec(w.normal)} for w in ws],
    }
    return payload, [_wall_row(w) for w in ws]


def _cmd_flips(a):
    stages = flip_sequence(a.g)
    m = 2 * a.g
    types = []
    for w in walls(m):
        if w.k >= 3:
            types.append({**w.label(), "flip": list(flip_type(w))})
    payload = {
        "g": a.g,
        "m": m,
        "stages": [st.to_json() for st in stages],
        "wall_flip_types": types,
    }
    rows = [{k: str(v) for k, v in st.to_json().items()} for st in stages]
    return payload, rows


def _cmd_cremona(a):
    D = _divisor(a.m, a.divisor)
    base = _ints(a.base) if a.base else None
    E = cremona_pushforward(D, base)
    payload = {
        "m": a.m,
        "s": D.model.s,
        "base": list(base) if base else list(range(1, a.m + 2)),
        "input": fmt_vec(D.vector),
        "degree": fmt(E.degree),
        "mults": fmt_vec(E.mults),
        "vector": fmt_vec(E.vector),
    }
    rows = [{"degree": fmt(E.degree), "mults": " ".join(fmt_vec(E.mults))}]
    return payload, rows


def _hilbert_payload(h, system=None):
    payload = h.to_json()
    if system is not None:
        payload["system"] = system.to_json()
    payload["h1"] = fmt(h.polynomial(1))
    payload["polynomial_text"] = str(h.polynomial)
    rows = [{"coefficient_of": f"t^{i}", "value": fmt(c)} for i, c in enumerate(h.polynomial.coefficients)]
    return payload, rows


def _cmd_hilbert(a):
    if a.system is not None:
        vals = _ints(a.system)
        if len(vals) < 2:
            raise ValueError("--system needs n,d followed by multiplicities")
        L = LinearSystem(vals[0], vals[1], vals[2:])
        return _hilbert_payload(hilbert(L), L)
    if a.sigma_odd is not None:
        return _hilbert_payload(hilbert_sigma_odd(a.sigma_odd))
    return _hilbert_payload(hilbert_sigma_even(a.sigma_even))


def _cmd_kumar(a):
    b = _ints(a.b)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        L = kumar_system(b)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    payload = {"b": list(b), "system": L.to_json(), "text": str(L), "clamped": bool(caught)}
    return payload, [{"n": L.n, "d": L.d, "mults": " ".join(str(x) for x in L.mults)}]


def _cmd_phi(a):
    D = _blowup_divisor(a.m, a.divisor)
    w = phi(D)
    payload = {"m": a.m, "divisor": fmt_vec(D.vector), "weights": w.to_json(), "admissible": w.is_admissible}
    return payload, [{"i": i + 1, "a": fmt(x)} for i, x in enumerate(w.a)]


def _cmd_facts(a):
    sheet = facts(a.m).to_json()
    rows = []
    for k, v in sheet.items():
        if isinstance(v, dict):
            rows += [{"key": f"{k}.{kk}", "value": vv} for kk, vv in v.items()]
        else:
            rows.append({"key": k, "value": "" if v is None else v})
    return sheet, rows


def _cmd_moving_rays(a):
    cone, labels = moving_curve_rays(a.g)
    payload = {
        "g": a.g,
        "count": len(cone.rays),
        "rays": [fmt_vec(r) for r in cone.rays],
        "labels": list(labels),
    }
    rows = [{"ray": " ".join(fmt_vec(r)), "label": lab} for r, lab in zip(cone.rays, labels)]
    return payload, rows


def _cmd_ne_rays(a):
    rep = ne_extremal_rays(a.g)
    payload = {"g": a.g, **rep.to_json()}
    payload["count"] = str(rep.count)
    rows = [
        {"ray": " ".join(str(x) for x in r), "family": lab["family"], "I": " ".join(map(str, lab["I"]))}
        for r, lab in zip(rep.rays, rep.labels)
    ]
    return payload, rows


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="morikit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.set_defaults(func=func)
        return sp

    sp = add("cones", _cmd_cones, "cones of divisors of X^m_{m+2}")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--which", choices=("eff", "mov", "nef", "fano"), default="eff")
    sp.add_argument("--rays", action="store_true", help="also enumerate extreme rays")

    sp = add("locate", _cmd_locate, "classify a divisor against every cone and wall")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--divisor", required=True, help="y,x1,...,x_{m+2}")

    sp = add("walls", _cmd_walls, "list the Mori chamber walls")
    sp.add_argument("--m", type=_positive, required=True)

    sp = add("flips", _cmd_flips, "flip sequence towards the Fano model of X^{2g}_{2g+2}")
    sp.add_argument("--g", type=_positive, required=True)

    sp = add("cremona", _cmd_cremona, "push a divisor through the standard Cremona map")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--divisor", required=True, help="y,x1,...,xs")
    sp.add_argument("--base", help="m+1 point indices (1-based)")

    sp = add("hilbert", _cmd_hilbert, "Hilbert polynomial and degree")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--system", help="n,d,m1,...,ms")
    grp.add_argument("--sigma-odd", type=_positive, dest="sigma_odd")
    grp.add_argument("--sigma-even", type=_positive, dest="sigma_even")

    sp = add("kumar", _cmd_kumar, "linear system attached to a polarization")
    sp.add_argument("--b", required=True, help="b1,...,bn")

    sp = add("phi", _cmd_phi, "Hassett weights of a divisor")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--divisor", required=True)

    sp = add("facts", _cmd_facts, "numeric invariants of the quotient")
    sp.add_argument("--m", type=_positive, required=True)

    sp = add("moving-rays", _cmd_moving_rays, "rays of the dual of the effective cone of X^{2g}_{2g+2}")
    sp.add_argument("--g", type=_positive, required=True)

    sp = add("ne-rays", _cmd_ne_rays, "extremal rays of the Mori cone of the Fano model")
    sp.add_argument("--g", type=_positive, required=True)
    return p


SUBCOMMANDS = (
    "cones", "locate", "walls", "flips", "cremona", "hilbert",
    "kumar", "phi", "facts", "moving-rays", "ne-rays",
)


def _glue_vector_options(argv: list) -> list:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VECTOR_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _render(payload: dict, rows: list, fmt_name: str) -> str:
    if fmt_name == "csv":
        buf = io.StringIO()
        if rows:
            fields = list(rows[0])
            for r in rows[1:]:
                fields += [k for k in r if k not in fields]
            w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    return json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    if argv and not argv[0].startswith("-") and argv[0] not in SUBCOMMANDS:
        print(f"morikit: unknown subcommand {argv[0]!r}", file=stderr)
        return EXIT_UNKNOWN
    if argv and argv[0] in ("-h", "--help"):
        stdout.write(build_parser().format_help())
        return EXIT_OK
    try:
        args = build_parser().parse_args(_glue_vector_options(argv))
    except _UsageError as exc:
        print(f"morikit: {exc}", file=stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help inside a subcommand
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID

    try:
        old = sys.stderr
        sys.stderr = stderr
        try:
            payload, rows = args.func(args)
        finally:
            sys.stderr = old
    except ResourceLimitExceeded as exc:
        print(f"morikit: {exc}", file=stderr)
        return EXIT_CAP
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"morikit: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(_render(payload, rows, args.format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
