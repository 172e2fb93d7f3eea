"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 theorem violation, 3 bound overrun.
"""

import argparse
import csv
import io
import json
import sys

from .errors import (BoundExceeded, GorensteinIdealization, InputError,
                     TheoremViolation)
from .idealization import (is_trace_iso, idealization_type, over_semigroups,
                           verify_trace_extension_bijection)
from .invariants import CHECKS, classify, hilbert_table
from .enumeration import ALL_CHECKS, CSV_FIELDS, survey
from .relideal import RelativeIdeal
from .semigroup import NumericalSemigroup, parse_generators

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_BOUND = 0, 1, 2, 3


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        return parse_generators(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    p = _Parser(prog="canred", description="Canonical reduction number and related "
                "invariants of numerical semigroup rings.")
    p.add_argument("--format", choices=("json", "csv", "table"), default=None,
                   help="output format (default: table on a terminal, json otherwise)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def gens_cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("gens", help='generators, e.g. "3,4,5" or "⟨3,4,5⟩"')
        s.add_argument("--format", choices=("json", "csv", "table"), default=None,
                       dest="sub_format")
        return s

    gens_cmd("info", "semigroup invariants")
    s = gens_cmd("canred", "canonical ideal, can.red and blow-up")
    s.add_argument("--show-powers", action="store_true", help="list K^0 .. K^(can.red+1)")
    s = gens_cmd("hilbert", "Hilbert function of the canonical ideal")
    s.add_argument("--n", type=int, default=None, dest="n_max",
                   help="largest n (default: max(10, multiplicity))")
    gens_cmd("classify", "full classification with theorem cross-checks")
    s = gens_cmd("idealize", "idealization R ⋉ M for a monomial module M")
    s.add_argument("--module", type=_int_list, required=True,
                   help="generators of M as a relative ideal, e.g. 2,3")
    gens_cmd("overrings", "over-semigroups and the trace-ideal correspondence")

    s = sub.add_parser("survey", help="run theorem checks over all semigroups up to a genus")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--checks", default=",".join(ALL_CHECKS),
                   help=f"comma list from {','.join(ALL_CHECKS)}")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--csv", dest="csv_path", default=None, help="write per-semigroup rows here")
    s.add_argument("--format", choices=("json", "csv", "table"), default=None,
                   dest="sub_format")
    return p


def _semigroup(text):
    return NumericalSemigroup(parse_generators(text))


def _emit(fmt, data, table_lines, csv_rows=None, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=";", lineterminator="\n")
        if csv_rows is None:
            csv_rows = [("key", "value")] + [(k, json.dumps(v, ensure_ascii=False))
                                              for k, v in sorted(data.items())]
        w.writerows(csv_rows)
        out.write(buf.getvalue())
    else:
        out.write("\n".join(table_lines) + "\n")


def _table(pairs):
    width = max(len(k) for k, _ in pairs)
    return [f"{k.ljust(width)}  {v}" for k, v in pairs]


def _yn(flag):
    return "true" if flag else "false"


def cmd_info(args, fmt):
    H = _semigroup(args.gens)
    data = H.to_dict()
    data["gaps"] = list(H.gaps)
    data["symmetric"] = H.is_symmetric()
    data["apery"] = list(H.apery)
    lines = _table([
        ("semigroup", str(H)),
        ("multiplicity", H.multiplicity),
        ("frobenius", H.frobenius),
        ("genus", H.genus),
        ("type", H.cm_type),
        ("PF", sorted(H.pf)),
        ("gaps", list(H.gaps)),
        ("apery", list(H.apery)),
        ("symmetric", _yn(H.is_symmetric())),
    ])
    rows = [("generators", "frobenius", "genus", "multiplicity", "type", "pf"),
            (",".join(map(str, H.generators)), H.frobenius, H.genus,
             H.multiplicity, H.cm_type, ",".join(map(str, sorted(H.pf))))]
    _emit(fmt, data, lines, rows)
    return EXIT_OK


def cmd_canred(args, fmt):
    H = _semigroup(args.gens)
    rep = classify(H)
    data = {
        "semigroup": H.to_dict(),
        "canonical": rep.canonical.to_dict(),
        "can_red": rep.can_red,
        "blow_up": rep.blow_up.to_dict(),
    }
    pairs = [("semigroup", str(H)), ("K", rep.canonical.describe()),
             ("can_red", rep.can_red), ("blow_up", rep.blow_up.describe())]
    if args.show_powers:
        powers = rep.powers(rep.can_red + 1)
        data["powers"] = [P.to_dict() for P in powers]
        pairs += [(f"K^{n}", P.describe()) for n, P in enumerate(powers)]
    lines = [f"can_red = {rep.can_red}"] + _table(pairs)
    _emit(fmt, data, lines)
    return EXIT_OK


def cmd_hilbert(args, fmt):
    H = _semigroup(args.gens)
    n_max = args.n_max if args.n_max is not None else max(10, H.multiplicity)
    tab = hilbert_table(H, n_max)
    data = {"semigroup": H.to_dict(), **tab.to_dict()}
    lines = _table([("semigroup", str(H)), ("e0", tab.e0), ("e1", tab.e1),
                    ("stabilization", tab.stabilization)])
    lines.append("n   HF(n)   e0*n-e1")
    for n, v in enumerate(tab.values):
        lines.append(f"{n:<3} {v:<7} {tab.e0 * n - tab.e1}")
    rows = [("n", "HF")] + list(enumerate(tab.values))
    _emit(fmt, data, lines, rows)
    return EXIT_OK


def cmd_classify(args, fmt):
    H = _semigroup(args.gens)
    rep = classify(H)
    lines = _table([
        ("semigroup", str(H)),
        ("genus", H.genus), ("multiplicity", H.multiplicity), ("type", rep.cm_type),
        ("K", rep.canonical.describe()),
        ("can_red", rep.can_red), ("e0", rep.e0), ("e1", rep.e1),
        ("blow_up", rep.blow_up.describe()), ("trace", rep.trace.describe()),
        ("gorenstein", _yn(rep.gorenstein)),
        ("almost_gorenstein", _yn(rep.almost_gorenstein)),
        ("nearly_gorenstein", _yn(rep.nearly_gorenstein)),
        ("hilbert", list(rep.hilbert.values)),
    ] + [(f"check {c}", "pass" if rep.checks.get(c) else "FAIL") for c in CHECKS])
    row = (",".join(map(str, H.generators)), H.genus, H.multiplicity, rep.cm_type,
           rep.can_red, rep.e0, rep.e1, int(rep.gorenstein),
           int(rep.almost_gorenstein), int(rep.nearly_gorenstein))
    _emit(fmt, rep.to_dict(), lines, [CSV_FIELDS, row])
    return EXIT_OK


def cmd_idealize(args, fmt):
    H = _semigroup(args.gens)
    E = RelativeIdeal.from_elements(H, args.module)
    ok, I = is_trace_iso(H, E)
    data = {"semigroup": H.to_dict(), "module": E.to_dict(), "trace_iso": ok,
            "canred_le2": ok, "witness_I": I.to_dict() if I else None,
            "gorenstein_idealization": False,
            "type_via_socle": None, "type_via_mu": None}
    if ok:
        try:
            rep = idealization_type(H, E)
            data.update(rep.to_dict())
            data["gorenstein_idealization"] = False
        except GorensteinIdealization as exc:
            data["gorenstein_idealization"] = True
            data["type_via_socle"] = data["type_via_mu"] = exc.cm_type
    lines = _table([
        ("semigroup", str(H)), ("module", E.describe()),
        ("trace_iso", _yn(ok)), ("can_red(A) <= 2", _yn(ok)),
        ("witness I", I.describe() if I else "-"),
        ("A Gorenstein", _yn(data["gorenstein_idealization"])),
        ("r(A) via socle", data["type_via_socle"]),
        ("r(A) via mu", data["type_via_mu"]),
    ])
    _emit(fmt, data, lines)
    return EXIT_OK


def cmd_overrings(args, fmt):
    H = _semigroup(args.gens)
    overs = over_semigroups(H)
    unit = RelativeIdeal.unit(H)
    bij = verify_trace_extension_bijection(H) if H.is_symmetric() else None
    entries = []
    for B in overs:
        entry = {"over_semigroup": B.to_dict()}
        if H.is_symmetric():
            entry["trace_ideal"] = unit.colon(B).to_dict()
        entries.append(entry)
    data = {"semigroup": H.to_dict(), "over_semigroups": entries, "bijection": bij}
    lines = [f"{len(overs)} over-semigroups of {H}"]
    for B in overs:
        text = B.describe()
        if H.is_symmetric():
            text += f"   <->   H - B = {unit.colon(B).describe()}"
        lines.append("  " + text)
    lines.append("bijection: " + ("n/a (H not symmetric)" if bij is None else _yn(bij)))
    _emit(fmt, data, lines)
    return EXIT_OK


def cmd_survey(args, fmt):
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    for c in checks:
        if c not in ALL_CHECKS:
            raise UsageError(f"unknown check: {c}")
    rep = survey(args.genus, checks, jobs=args.jobs)
    if args.csv_path:
        with open(args.csv_path, "w", newline="") as fh:
            fh.write(rep.to_csv())
    lines = _table([
        ("genus_max", rep.genus_max), ("total", rep.total),
        ("checks", ",".join(rep.checks)),
        *[(k, v) for k, v in sorted(rep.counts.items())],
        ("can_red histogram", " ".join(f"{k}:{v}" for k, v in sorted(rep.can_red_histogram.items()))),
        ("violations", len(rep.violations)),
    ])
    for v in rep.violations:
        lines.append(f"  {v}")
    if fmt == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        _emit(fmt, rep.to_dict(), lines)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


COMMANDS = {
    "info": cmd_info, "canred": cmd_canred, "hilbert": cmd_hilbert,
    "classify": cmd_classify, "idealize": cmd_idealize,
    "overrings": cmd_overrings, "survey": cmd_survey,
}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "sub_format", None) or args.format
        if fmt is None:
            fmt = "table" if sys.stdout.isatty() else "json"
        return COMMANDS[args.command](args, fmt)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
