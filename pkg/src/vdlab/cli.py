"""Command-line interface: ``vdlab <subcommand> [options]``.

Output is JSON on stdout (sorted keys, rationals as "p/q"), or CSV with
``--csv``. Exit status: 0 success, 2 inconclusive (a resource cap was hit),
1 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field, is_dataclass
from fractions import Fraction

from gmpy2 import mpq

from . import closed_forms as cf
from .cache import GBCache, cached_groebner
from .groebner import (Caps, GroebnerCapExceeded, codimension, degree_of_quotient,
                       hilbert_series_quotient, krull_dimension)
from .ideals import (IndexTuple, PartitionSpec, build_confluent_ideal, build_ideal_A, build_ideal_BC,
                     build_ideal_coarse, parse_tuple)
from .polyring import Polynomial, UniPoly, format_poly, parse_poly
from .recurrences import RecurrenceSpec, emptiness_scan, forcing_check, nondegenerate, vieta, zero_report
from .regularity import (a_regularity_scan, ckw_comparison_scan, ckw_predicate, h_regular,
                         membership_hc, periodicity_scan)
from .relations import arel_relation, brel_relation, det_Hl_expansion
from .symmetric import schur_bialternant, schur_degree, schur_jacobi_trudi

SCHEMA = "vdlab/1"
_MPQ = type(mpq(0))
EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2

CSV_COLUMNS = ["schema", "command", "k", "tuple", "flavor", "dim", "codim", "degree", "numerator",
               "regular", "empty", "conjectural", "inconclusive", "degenerate", "wall_time", "extra"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class ScanRecord:
    command: str
    k: int | None = None
    tuple: tuple | None = None
    flavor: str | None = None
    dim: int | None = None
    codim: int | None = None
    degree: int | None = None
    numerator: list | None = None
    regular: bool | None = None
    empty: bool | None = None
    conjectural: bool = False
    inconclusive: bool = False
    degenerate: bool = False
    wall_time: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema"] = SCHEMA
        return d


# -- rendering -----------------------------------------------------------------------

def _rational(q) -> object:
    q = Fraction(int(q.numerator), int(q.denominator))
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def jsonable(obj):
    if isinstance(obj, (Fraction, _MPQ)):
        return _rational(obj)
    if isinstance(obj, Polynomial):
        return format_poly(obj)
    if isinstance(obj, UniPoly):
        return list(obj.coeffs)
    if isinstance(obj, ScanRecord):
        return jsonable(obj.to_dict())
    if is_dataclass(obj) and not isinstance(obj, type):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, float):
        return round(obj, 6)
    return obj


def render_json(payload) -> str:
    return json.dumps(jsonable(payload), sort_keys=True, indent=1)


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return v


def render_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        d = jsonable(r.to_dict())
        w.writerow([_csv_cell(d.get(c)) for c in CSV_COLUMNS])
    return buf.getvalue()


# -- helpers -------------------------------------------------------------------------

def _tuple_arg(args) -> IndexTuple:
    try:
        return IndexTuple(args.k, parse_tuple(args.i))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _ints(text: str) -> tuple:
    try:
        return parse_tuple(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fracs(text: str) -> tuple:
    try:
        return tuple(Fraction(tok) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational list {text!r}") from exc


def _generators(t: IndexTuple, flavor: str, minimal: bool = False, partition: str | None = None):
    if flavor == "A":
        return build_ideal_A(t, minimal=minimal)
    if flavor == "BC":
        return build_ideal_BC(t)
    if flavor == "coarse":
        return build_ideal_coarse(t)
    if flavor == "confluent":
        if not partition:
            raise UsageError("--partition is required for the confluent flavor")
        return build_confluent_ideal(t, PartitionSpec(_ints(partition)))
    raise UsageError(f"unknown flavor {flavor!r}")


def _gb(args, gens, nvars):
    return cached_groebner(list(gens), args.order, args.caps, nvars, args.cache)


def _oracle_record(args, command: str) -> tuple:
    t = _tuple_arg(args)
    gs = _generators(t, args.flavor, getattr(args, "minimal", False), getattr(args, "partition", None))
    t0 = time.perf_counter()
    gb = _gb(args, gs.nonzero, gs.nvars)
    hs = hilbert_series_quotient(gb)
    rec = ScanRecord(command, t.k, t.I, args.flavor, krull_dimension(gb), codimension(gb),
                     degree_of_quotient(gb), list(hs.numerator.coeffs))
    rec.extra["denomPower"] = hs.denominator_power
    rec.wall_time = time.perf_counter() - t0
    return t, gb, hs, rec


# -- subcommands ----------------------------------------------------------------------

def cmd_schur(args):
    J = _ints(args.J)
    pos, sign = schur_bialternant(J)
    out = {"J": J, "schur": pos, "bialternant_sign": sign, "degree": schur_degree(J)}
    if args.check:
        jt, jsign = schur_jacobi_trudi(J)
        out.update(jacobi_trudi_sign=jsign, agree=jt == pos)
    return out, False


def cmd_ideal(args):
    t = _tuple_arg(args)
    gs = _generators(t, args.flavor, args.minimal, args.partition)
    return {"k": t.k, "tuple": t.I, "flavor": gs.flavor, "nvars": gs.nvars, "tags": sorted(gs.tags),
            "N": t.N, "gcd": t.gcd, "dual": t.dual.I,
            "generators": [{"subsequence": J, "poly": g, "degree": g.degree() if g else None}
                           for J, g in zip(gs.provenance, gs.generators)]}, False


def cmd_gb(args):
    if args.gens:
        try:
            gens = [parse_poly(s, args.nvars) for s in args.gens.split(";") if s.strip()]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if not gens:
            raise UsageError("no generators given")
        n = args.nvars or max(g.nvars for g in gens)
        gens = [g if g.nvars == n else g.extend(n - g.nvars) for g in gens]
    else:
        if args.k is None or args.i is None:
            raise UsageError("give --gens or --k/--i")
        gs = _generators(_tuple_arg(args), args.flavor, args.minimal, args.partition)
        gens, n = list(gs.nonzero), gs.nvars
    gb = _gb(args, gens, n)
    return {"order": gb.order, "nvars": gb.nvars, "basis": list(gb.basis), "unit": gb.is_unit(),
            "dim": krull_dimension(gb)}, False


def _closed_form_fields(t: IndexTuple, flavor: str, hs, rec: ScanRecord):
    if flavor == "A" and t.I[0] == 0:
        if t.m == t.k + 1:
            rec.extra["closed_form"] = "kk1"
            rec.extra["match"] = cf.hilbert_series_kk1(t) == hs
        elif t.k <= t.m <= 2 * t.k - 1:
            regular = rec.codim == t.m - t.k + 1
            en = cf.hilbert_numerator_EN(t)
            rec.extra["closed_form"] = "EN zero-anchored"
            rec.extra["regular"] = regular
            rec.extra["match"] = cf.HilbertSeries(en, t.k) == hs
    if flavor == "BC" and t.m == t.k + 1 and t.I[0] == 0:
        rec.conjectural = True
        variants = {}
        for v in cf.BC_VARIANTS:
            try:
                variants[v] = cf.hilbert_series_BC_conj(t, v).value == hs
            except ValueError:
                variants[v] = None
        rec.extra["conjectural_match"] = variants


def cmd_hilbert(args):
    t, gb, hs, rec = _oracle_record(args, "hilbert")
    _closed_form_fields(t, args.flavor, hs, rec)
    return rec, False


def cmd_degree(args):
    t, gb, hs, rec = _oracle_record(args, "degree")
    forms = {}
    if args.flavor == "A" and t.I[0] == 0:
        if t.m == t.k + 1:
            forms["kk1"] = cf.degree_kk1(t)
        forms["gtp"] = cf.degree_gtp(t)
        if t.k <= t.m <= 2 * t.k - 1:
            try:
                forms["en"] = cf.degree_from_numerator(cf.hilbert_numerator_EN(t), t.m - t.k + 1)
            except ValueError:
                forms["en"] = None
        rec.regular = rec.codim == t.m - t.k + 1
    if args.flavor == "BC" and t.m == t.k + 1 and t.I[0] == 0:
        forms["bc_conjectural"] = cf.degree_BC_conj(t).value
        rec.conjectural = True
    rec.extra["closed_forms"] = forms
    return rec, False


def cmd_relations(args):
    t = _tuple_arg(args)
    k = t.k
    certs = []
    try:
        if args.kind == "A":
            for s in ([args.s] if args.s is not None else range(k)):
                certs.append(arel_relation(t, s, args.ring))
        elif args.kind == "detH":
            for l in ([args.l] if args.l is not None else range(1, k + 1)):
                certs.append(det_Hl_expansion(t, l))
        else:
            for s in ([args.s] if args.s is not None else range(k)):
                certs.append(brel_relation(t, s))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"certificates": [c.to_dict() for c in certs], "all_verified": all(c.verified for c in certs)}
    if args.kind == "BC":
        out["conjectural"] = True
    return out, False


def cmd_ckw(args):
    if args.bound is not None:
        recs = ckw_comparison_scan(args.bound, args.caps, args.workers)
        rows = [ScanRecord("ckw", 3, r.tuple, "h", codim=r.oracle_codim, regular=r.is_regular,
                           inconclusive=r.status != "ok", wall_time=r.seconds,
                           extra={"ckw": r.ckw_prediction, "agree": r.agrees(), "hc_member": r.membership})
                for r in recs]
        return rows, any(r.inconclusive for r in rows)
    a, b, c = args.a, args.b, args.c
    if None in (a, b, c):
        raise UsageError("give --a --b --c or --bound")
    try:
        pred = ckw_predicate(a, b, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reg = h_regular((a, b, c), args.caps)
    return {"abc": (a, b, c), "ckw": pred, "regular": reg, "agree": pred == reg,
            "hc_member": membership_hc(a, b, c, args.caps), "conjectural": True}, False


def cmd_scan_regular(args):
    sel = None
    if args.i1 == "one":
        sel = lambda v: v == 1  # noqa: E731
    elif args.i1 == "ge2":
        sel = lambda v: v >= 2  # noqa: E731
    recs = a_regularity_scan(args.k, args.m, args.bound, args.caps, args.workers, i1=sel)
    rows = [ScanRecord("scan-regular", r.k, r.tuple, "A", codim=r.oracle_codim, regular=r.is_regular,
                       inconclusive=r.status != "ok", degenerate=r.degenerate, wall_time=r.seconds,
                       extra={"expected_codim": r.expected_codim, **{k: v for k, v in r.notes.items()}})
            for r in recs]
    return rows, any(r.inconclusive for r in rows)


def cmd_scan_empty(args):
    recs = emptiness_scan(args.k, args.m, args.bound, args.caps, args.workers)
    rows = [ScanRecord("scan-empty", r.k, r.tuple, "BC", empty=r.empty, inconclusive=r.empty is None,
                       wall_time=r.seconds, extra={"strata": r.strata}) for r in recs]
    if args.only_empty:
        rows = [r for r in rows if r.empty]
    return rows, any(r.inconclusive for r in rows)


def cmd_scan_period(args):
    prefix = _ints(args.prefix)
    rep = periodicity_scan(args.k, prefix, range(args.last_from, args.last_to + 1), args.caps, args.workers)
    out = {"prefix": rep.prefix, "k": rep.k, "table": rep.table, "period": rep.period,
           "periodic_from": rep.start, "note": "observed in window; not a proof"}
    return out, any(d is None for _, d in rep.table)


def cmd_recurrence(args):
    if args.roots:
        try:
            spec = vieta(_fracs(args.roots))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.alphas:
        try:
            spec = RecurrenceSpec(_fracs(args.alphas))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("give --roots or --alphas")
    init = _fracs(args.initial)
    try:
        rep = zero_report(spec, init, args.n_max, args.d_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"alphas": spec.alphas, "roots": spec.roots, "zeros": rep.zeros,
           "progressions": rep.progressions, "sporadic": rep.sporadic, "trivial": rep.trivial,
           "window": rep.window, "note": rep.note}
    if spec.roots is not None:
        out["nondegenerate"] = nondegenerate(spec)
    return out, False


def cmd_forcing(args):
    base = IndexTuple(args.k, _ints(args.base))
    res = forcing_check(base, args.extra, args.caps)
    return {"base": res.base, "extra": res.extra, "forced": res.forced, "survivors": res.survivors,
            "scope": res.scope}, res.forced is None


COMMANDS = {
    "schur": cmd_schur, "ideal": cmd_ideal, "gb": cmd_gb, "hilbert": cmd_hilbert, "degree": cmd_degree,
    "relations": cmd_relations, "ckw": cmd_ckw, "scan-regular": cmd_scan_regular,
    "scan-empty": cmd_scan_empty, "scan-period": cmd_scan_period, "recurrence": cmd_recurrence,
    "forcing": cmd_forcing,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="CSV instead of JSON (scan output)")
    common.add_argument("--no-cache", action="store_true", help="bypass the Groebner cache")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--max-pairs", type=int, default=None)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    common.add_argument("--timing", action="store_true",
                        help="report wall times (output is then no longer byte-reproducible)")

    def tuple_opts(p, flavor=True):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--i", required=True, help="comma-separated entries, e.g. 0,1,3,7")
        if flavor:
            p.add_argument("--flavor", choices=("A", "BC", "coarse", "confluent"), default="A")
            p.add_argument("--minimal", action="store_true")
            p.add_argument("--partition", default=None, help="e.g. 2,1 (confluent flavor)")

    ap = _Parser(prog="vdlab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("schur", parents=[common], help="Schur polynomial of an exponent set")
    p.add_argument("--J", required=True)
    p.add_argument("--check", action="store_true", help="cross-check against Jacobi-Trudi")

    p = sub.add_parser("ideal", parents=[common], help="generator set with provenance")
    tuple_opts(p)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    p.add_argument("--gens", default=None, help='";"-separated polynomials in x1..xn')
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", default=None)
    p.add_argument("--flavor", choices=("A", "BC", "coarse", "confluent"), default="A")
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--partition", default=None)

    for name in ("hilbert", "degree"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of the quotient vs closed forms")
        tuple_opts(p)

    p = sub.add_parser("relations", parents=[common], help="certify Schur relations (m = k+1)")
    tuple_opts(p, flavor=False)
    p.add_argument("--kind", choices=("A", "BC", "detH"), default="A")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--ring", choices=("auto", "x", "h"), default="auto")

    p = sub.add_parser("ckw", parents=[common], help="CKW predicate vs oracle")
    for name in ("a", "b", "c", "bound"):
        p.add_argument(f"--{name}", type=int, default=None)

    p = sub.add_parser("scan-regular", parents=[common], help="expected-codimension scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--i1", choices=("any", "one", "ge2"), default="any")

    p = sub.add_parser("scan-empty", parents=[common], help="emptiness of recurrence varieties")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--only-empty", action="store_true")

    p = sub.add_parser("scan-period", parents=[common], help="dimension as a function of the last entry")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prefix", required=True)
    p.add_argument("--last-from", type=int, required=True)
    p.add_argument("--last-to", type=int, required=True)

    p = sub.add_parser("recurrence", parents=[common], help="evaluate a recurrence and report zeros")
    p.add_argument("--roots", default=None)
    p.add_argument("--alphas", default=None)
    p.add_argument("--initial", required=True)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--d-max", type=int, default=10)

    p = sub.add_parser("forcing", parents=[common], help="does vanishing on base force a zero at extra")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--extra", type=int, required=True)
    return ap


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    d = Caps.from_env()
    args.caps = Caps(args.max_pairs or d.max_pairs, args.max_degree or d.max_degree)
    args.cache = None if args.no_cache else GBCache(args.cache_dir)
    try:
        payload, inconclusive = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"vdlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroebnerCapExceeded as exc:
        payload = {"command": args.command, "inconclusive": True, "reason": str(exc)}
        inconclusive = True
    if not args.timing:
        for rec in payload if isinstance(payload, list) else [payload]:
            if isinstance(rec, ScanRecord):
                rec.wall_time = None
    if args.csv:
        rows = payload if isinstance(payload, list) else [payload] if isinstance(payload, ScanRecord) else None
        if rows is None:
            print(f"vdlab {args.command}: --csv applies to record output only", file=sys.stderr)
            return EXIT_USAGE
        stdout.write(render_csv(rows))
    else:
        if isinstance(payload, list):
            payload = {"schema": SCHEMA, "command": args.command, "records": payload}
        elif isinstance(payload, dict):
            payload = {"schema": SCHEMA, "command": args.command, **payload}
        stdout.write(render_json(payload) + "\n")
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
