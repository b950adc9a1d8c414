"""Command-line front end: ``luequiv <command> ...`` (also ``python -m luequiv``).

Exit codes: 0 success or equivalent, 1 inequivalent, 2 usage or parse
error, 3 resource cap exceeded, 4 a verification check failed.
"""

import argparse
import csv
import io
import json
import re
import sys
from importlib import resources

from . import oracle
from .classify import (DEFAULT_CAP, ResourceCapExceeded, classify_all, decide_u, decide_uc,
                       u_class, uc_orbit, uc_orbits_of_standardizations)
from .gpm import GpmSet, power_vector, standardize_all
from .reduce import reduce

EXIT_OK, EXIT_INEQUIVALENT, EXIT_USAGE, EXIT_CAP, EXIT_CHECK = 0, 1, 2, 3, 4


class ParseError(ValueError):
    pass


# Named sets, members in the order they are usually written.
ALIASES = {
    6: {
        "C1": "I,Z,Z^2,Z^3", "C2": "I,Z,Z^2,Z^4", "C3": "I,Z,Z^2,X",
        "C4": "I,Z,Z^2,X^2", "C5": "I,Z,Z^2,X^2Z", "C6": "I,Z,Z^2,X^3",
        "C7": "I,Z,Z^2,X^3Z", "C8": "I,Z,Z^3,Z^4", "C9": "I,Z,Z^3,X",
        "C10": "I,Z,Z^3,X^2", "C11": "I,Z,Z^3,X^2Z", "C12": "I,Z,Z^3,X^3",
        "C13": "I,Z,Z^3,X^3Z", "C14": "I,Z,Z^3,X^5", "C15": "I,Z,X,XZ",
        "C16": "I,Z,X,XZ^2", "C17": "I,Z,X,XZ^3", "C18": "I,Z,X,X^2Z^2",
        "C19": "I,Z,X,X^3Z^5", "C20": "I,Z,X,X^4Z^4", "C21": "I,Z,X^2,X^2Z",
        "C22": "I,Z,X^2,X^2Z^2", "C23": "I,Z,X^2,X^2Z^5", "C24": "I,Z,X^2,X^3Z",
        "C25": "I,Z,X^2,X^4", "C26": "I,Z,X^3,X^3Z", "C27": "I,Z,X^3,X^3Z^3",
        "C28": "I,Z,X^3,X^3Z^5", "C29": "I,Z^2,Z^4,X^2", "C30": "I,Z^2,X^2,X^2Z^2",
        "C31": "I,Z^3,X^3,X^3Z^3",
    },
    4: {
        "K": "I,X^2,Z^2,X^2Z^2", "L": "I,X,X^2,X^3",
        "G120": "I,X,Z,X^2", "G131": "I,X,Z,X^3Z", "G133": "I,X,Z,X^3Z^3",
        "G212": "I,X,Z^2,XZ^2", "G230": "I,X,Z^2,X^3", "G112": "I,X,Z,XZ^2",
        "G220": "I,X,Z^2,X^2", "G232": "I,X,Z^2,X^3Z^2",
    },
}
ALIAS_DIM = {name: d for d, table in ALIASES.items() for name in table}

# Golden tables: id -> (dimension, generator alias, standardization index or None)
# None means the table lists the whole class split into its UC orbits.
TABLES = {
    1: (6, "C1", None), 2: (6, "C2", None),
    3: (6, "C3", 0), 4: (6, "C3", 1), 5: (6, "C3", 2), 6: (6, "C3", 3),
    7: (4, "K", None), 8: (4, "L", None), 9: (4, "G120", None),
    10: (4, "G131", None), 11: (4, "G133", None), 12: (4, "G212", None),
    13: (4, "G230", None), 14: (4, "G112", None), 15: (4, "G220", None),
    16: (4, "G232", None),
}
TABLE_ALIASES = {"4.1": 1, "4.2": 2, "4.3": 3, "4.4": 4, "4.5": 5, "4.6": 6,
                 **{f"5.{k}": 6 + k for k in range(1, 11)}}

PAIR_RE = re.compile(r"\((-?\d+),(-?\d+)\)")
TOKEN_RE = re.compile(r"(?:[IXZ](?:\^\d+)?)+")
FACTOR_RE = re.compile(r"([IXZ])(?:\^(\d+))?")
ITEM_RE = re.compile(r"\(-?\d+,-?\d+\)|[IXZ0-9^]+")


def parse_item(item):
    m = PAIR_RE.fullmatch(item)
    if m:
        return int(m.group(1)), int(m.group(2))
    if not TOKEN_RE.fullmatch(item):
        raise ParseError(f"cannot parse member {item!r}")
    s = t = 0
    for letter, exp in FACTOR_RE.findall(item):
        k = int(exp) if exp else 1
        if letter == "X":
            s += k
        elif letter == "Z":
            t += k
    return s, t


def parse_members(text):
    """Members of a brace-delimited set in written order (not reduced)."""
    body = re.sub(r"\s+", "", text)
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not body:
        raise ParseError("empty set")
    items = ITEM_RE.findall(body)
    if ",".join(items) != body:
        raise ParseError(f"malformed set {text!r}")
    return [parse_item(it) for it in items]


def parse_set(text, d=None):
    """Return ``(d, GpmSet, written_order)``; aliases fix d themselves."""
    name = text.strip()
    if name in ALIAS_DIM:
        alias_d = ALIAS_DIM[name]
        if d is not None and d != alias_d:
            raise ParseError(f"{name} is defined for d={alias_d}, not d={d}")
        d, text = alias_d, ALIASES[alias_d][name]
    if d is None:
        raise ParseError("--d is required unless a named set is given")
    if d < 3:
        raise ParseError(f"dimension must be >= 3, got {d}")
    pairs = parse_members(text)
    order = [(s % d, t % d) for s, t in pairs]
    try:
        gset = GpmSet.of(d, order)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return d, gset, order


def csv_row(gset):
    return ";".join(f"{s}:{t}" for s, t in gset)


def render_sets(sets, fmt, *, d, header=None):
    sets = list(sets)
    if fmt == "json":
        return json.dumps({"d": d, "count": len(sets), "sets": [str(m) for m in sets]}, indent=1)
    lines = [header] if header else []
    if fmt == "csv":
        lines += [csv_row(m) for m in sets]
    else:
        lines += [str(m) for m in sets]
    return "\n".join(lines)


def emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def check_orbit_cap(gset, cap):
    ctx = reduce(gset).context
    bound = (ctx.d // ctx.a) ** 2 * (ctx.d // ctx.b) ** 2
    if bound > cap:
        raise ResourceCapExceeded(f"{bound} candidate operators exceed the cap of {cap}")


def cmd_power(args):
    _, gset, _ = parse_set(args.set, args.d)
    emit(args, "(" + ",".join(map(str, power_vector(gset))) + ")")
    return EXIT_OK


def _orbit_command(args, build):
    d, gset, order = parse_set(args.set, args.d)
    if not gset.is_standard:
        fixed = standardize_all(gset, order)[0]
        warn(f"{gset} is not standard; using {fixed}")
        gset = fixed
    check_orbit_cap(gset, args.cap)
    orbit = build(gset)
    if args.count_only:
        emit(args, str(len(orbit)))
    else:
        emit(args, render_sets(orbit, args.format, d=d,
                               header=None if args.format == "csv" else f"count {len(orbit)}"))
    return EXIT_OK


def cmd_uc_orbit(args):
    return _orbit_command(args, uc_orbit)


def cmd_u_class(args):
    return _orbit_command(args, u_class)


def cmd_decide(args):
    d, m, order_m = parse_set(args.first, args.d)
    _, n, _ = parse_set(args.second, d)
    if len(m) != len(n):
        raise ParseError(f"sets differ in size: {len(m)} vs {len(n)}")
    if args.kind == "uc":
        pm, pn = power_vector(m), power_vector(n)
        if pm != pn:
            emit(args, f"inequivalent (power vectors {pm} vs {pn})")
            return EXIT_INEQUIVALENT
        if not (m.is_standard and n.is_standard):
            raise ParseError("decide uc expects standard sets (containing I)")
        check_orbit_cap(m, args.cap)
        same = decide_uc(m, n)
    else:
        check_orbit_cap(standardize_all(m, order_m)[0], args.cap)
        same = decide_u(m, n)
    emit(args, "equivalent" if same else "inequivalent")
    return EXIT_OK if same else EXIT_INEQUIVALENT


def cmd_classify(args):
    if args.d is None or args.n is None:
        raise ParseError("classify needs --d and --n")
    part = classify_all(args.d, args.n, cap=args.cap, workers=args.workers, with_totals=True)
    total = sum(c.total_size for c in part.classes)
    if args.format == "json":
        data = part.to_dict(with_members=not args.count_only)
        data["totals"] = {"classes": len(part.classes), "standard": part.standard_total,
                          "all": total}
        emit(args, json.dumps(data, indent=1))
    elif args.format == "csv":
        lines = ["class,size,total_size,representative"]
        lines += [f"{k},{c.size},{c.total_size},{csv_row(c.representative)}"
                  for k, c in enumerate(part.classes, 1)]
        emit(args, "\n".join(lines))
    else:
        lines = [f"{k:>3}  {c.size:>5}  {c.representative}" for k, c in enumerate(part.classes, 1)]
        if args.count_only:
            lines = []
        lines.append(f"classes {len(part.classes)}  standard sets {part.standard_total}"
                     f"  all sets {total}")
        emit(args, "\n".join(lines))
    return EXIT_OK


def table_id(text):
    if text in TABLE_ALIASES:
        return TABLE_ALIASES[text]
    try:
        k = int(text)
    except ValueError:
        raise ParseError(f"unknown table {text!r}") from None
    if k not in TABLES:
        raise ParseError(f"unknown table {text!r}; ids are 1..{len(TABLES)}")
    return k


def table_rows(k):
    """``(block, GpmSet)`` rows of table k, recomputed from scratch."""
    d, alias, index = TABLES[k]
    _, gset, order = parse_set(alias)
    if index is not None:
        g = order[index]
        start = standardize_all(gset, [g] + [h for h in order if h != g])[0]
        suffix = f"_{index}" if index else ""
        blocks = [(f"UC({alias}{suffix})", uc_orbit(start))]
    else:
        blocks = [(f"UC({alias}_{i})" if i else f"UC({alias})", orb)
                  for i, orb in uc_orbits_of_standardizations(gset, order)]
    return [(name, m) for name, orb in blocks for m in orb]


def golden_table(k):
    path = resources.files("luequiv") / "data" / "tables" / f"table{k:02d}.csv"
    return path.read_text()


def cmd_tables(args):
    k = table_id(args.which)
    rows = table_rows(k)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["block", "set"])
        for name, m in rows:
            w.writerow([name, csv_row(m)])
        emit(args, buf.getvalue().rstrip("\n"))
    elif args.format == "json":
        blocks = {}
        for name, m in rows:
            blocks.setdefault(name, []).append(str(m))
        emit(args, json.dumps({"table": k, "blocks": blocks}, indent=1))
    else:
        lines, current = [], None
        for name, m in rows:
            if name != current:
                current = name
                lines.append(f"{name}")
            lines.append(f"  {m}")
        emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args):
    results = oracle.run_all()
    for k in TABLES:
        results.append((f"table {k} matches golden file", _table_matches(k)))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    emit(args, "\n".join(lines))
    return EXIT_OK if all(ok for _, ok in results) else EXIT_CHECK


def _table_matches(k):
    want = golden_table(k).splitlines()[1:]
    got = [f"{name},{csv_row(m)}" for name, m in table_rows(k)]
    return want == got


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="local dimension")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        help="output format (default: text, csv for tables)")
    common.add_argument("--count-only", action="store_true")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="refuse work whose enumeration exceeds this many items")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", metavar="FILE")

    parser = argparse.ArgumentParser(prog="luequiv",
                                     description="Equivalence of generalized Pauli matrix sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", parents=[common], help="essential power vector")
    p.add_argument("set")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("uc-orbit", parents=[common], help="all standard sets UC-equivalent to SET")
    p.add_argument("set")
    p.set_defaults(func=cmd_uc_orbit)

    p = sub.add_parser("u-class", parents=[common], help="all standard sets U-equivalent to SET")
    p.add_argument("set")
    p.set_defaults(func=cmd_u_class)

    p = sub.add_parser("decide", parents=[common], help="decide UC- or U-equivalence")
    p.add_argument("kind", choices=("uc", "u"))
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("classify", parents=[common], help="partition all standard n-sets")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", parents=[common], help="regenerate a golden orbit table")
    p.add_argument("which", help="1..16, or 4.1..4.6 / 5.1..5.10")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run the numeric and golden checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        args.format = "csv" if args.command == "tables" else "text"
    if args.cap < 1:
        print("error: --cap must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
