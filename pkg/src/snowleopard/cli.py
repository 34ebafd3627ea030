"""Command-line interface.

Enumeration output is deterministic: objects are formatted to text and
sorted lexicographically before emission, so identical invocations produce
byte-identical streams regardless of --threads.

Exit codes: 0 success, 1 verification failure (or a failed check), 2 usage
or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

from . import aztec, baxter, catalan, entangle, motzkin, patterns, perm, threads
from .errors import SnowLeopardError

TABLE_SLP = {
    1: {"1"},
    3: {"1 2 3", "3 2 1"},
    5: {"1 2 3 4 5", "1 4 3 2 5", "3 4 5 2 1", "5 4 1 2 3", "5 4 3 2 1"},
}
TABLE_ET = {-1: 1, 0: 1, 1: 1, 2: 2, 3: 6, 4: 17, 5: 46, 6: 128}
TABLE_OT = {-1: 0, 0: 1, 1: 1, 2: 2, 3: 4, 4: 9, 5: 23, 6: 63}
TABLE_JT = {-1: 1, 0: 1, 1: 1, 2: 2, 3: 4, 4: 8, 5: 17, 6: 37, 7: 82, 8: 185, 9: 423}
TABLE_UD = {0: 1, 1: 1, 2: 1, 3: 2, 4: 4, 5: 8, 6: 17, 7: 37, 8: 82, 9: 185, 10: 423}
TABLE_PATH_TO_EVEN = {
    "": "@", "NE": "e", "NENE": "1", "NENENE": "2 1", "NNNEEE": "1 2",
    "NNNNEEEE": "1 2 3", "NNNENEEE": "1 3 2", "NNNEENEE": "2 1 3",
    "NNNEEENE": "3 1 2", "NENNNEEE": "2 3 1", "NENENENE": "3 2 1",
}
TABLE_PATH_TO_ODD = {
    "": "e", "NE": "1", "NENE": "1 2", "NNEE": "2 1",
    "NNNEEE": "3 2 1", "NNENEE": "3 1 2", "NENNEE": "2 3 1", "NENENE": "1 2 3",
}


def _emit(items: Iterable[str], kind: str, n: int, fmt: str) -> None:
    values = sorted(items)
    if fmt == "count":
        print(len(values))
        return
    if fmt == "csv":
        print("kind,n,value")
        for v in values:
            print(f"{kind},{n},{v}")
        return
    for v in values:
        if fmt == "jsonl":
            print(json.dumps({"kind": kind, "n": n, "value": v}, sort_keys=True))
        else:
            print(v)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "slp":
        n = args.len if args.len is not None else args.n
        if n is None:
            raise SnowLeopardError("enumerate slp requires --len")
        items = map(perm.format_perm, baxter.enumerate_slp(n))
    else:
        if args.n is None:
            raise SnowLeopardError(f"enumerate {kind} requires --n")
        n = args.n
        if kind == "et":
            items = map(perm.format_perm, threads.even_threads(n))
        elif kind == "ot":
            items = map(perm.format_perm, threads.odd_threads(n))
        elif kind == "jt":
            items = map(perm.format_perm, motzkin.janus_threads(n))
        elif kind == "enne":
            items = catalan.enumerate_enne(n)
        elif kind == "neen":
            items = catalan.enumerate_neen(n)
        elif kind == "ud":
            items = map(_format_path, motzkin.enumerate_peakless(n))
        elif kind == "inv3412":
            items = map(perm.format_perm, entangle.involutions_avoiding_3412(n))
        elif kind == "tilings":
            items = (t_.replace("\n", "; ") for t_ in
                     (aztec.format_tiling(t) for t in aztec.enumerate_tilings(n)))
        else:
            raise SnowLeopardError(f"unknown kind: {kind}")
    _emit(items, kind, n, args.format)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    p = perm.parse_perm(args.perm)
    ok = baxter.is_slp(p)
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    p = perm.parse_perm(args.perm)
    if args.what == "slp":
        d = baxter.slp_decompose(p)
        print(f"left: {perm.format_perm(d.left)}")
        print(f"right: {perm.format_perm(d.right)}")
        pos = "none" if d.connector_position is None else str(d.connector_position)
        print(f"connector_position: {pos}")
    elif args.what == "odd":
        a2, b2 = threads.odd_decompose(p)
        print(f"even_part: {perm.format_perm(a2)}")
        print(f"odd_part: {perm.format_perm(b2)}")
    else:
        for b1, a1 in threads.even_decompositions(p):
            print(f"odd_part: {perm.format_perm(b1)} | even_part: {perm.format_perm(a1)}")
    return 0


def _format_path(w: str) -> str:
    # "-" stands for the empty path on the command line
    return w or "-"


def _parse_path(s: str) -> str:
    return "" if s in ("", "-") else s.upper()


_MAPS: dict[str, Callable[[str], str]] = {
    "H": lambda s: perm.format_perm(catalan.enne_to_even_thread(_parse_path(s))),
    "J": lambda s: perm.format_perm(catalan.neen_to_odd_thread(_parse_path(s))),
    "F": lambda s: _format_path(catalan.even_thread_to_enne(perm.parse_perm(s))),
    "G": lambda s: _format_path(catalan.odd_thread_to_neen(perm.parse_perm(s))),
    "K": lambda s: _format_path(motzkin.janus_to_peakless(perm.parse_perm(s))),
    "Kdirect": lambda s: _format_path(motzkin.janus_to_peakless_direct(perm.parse_perm(s))),
    "reduce": lambda s: perm.format_perm(baxter.reduce(perm.parse_perm(s))),
    "anti": lambda s: perm.format_perm(baxter.anti_of(perm.parse_perm(s))),
    "complement": lambda s: perm.format_perm(perm.complement(perm.parse_perm(s))),
}


def _cmd_map(args: argparse.Namespace) -> int:
    print(_MAPS[args.name](args.input))
    return 0


def _cmd_partners(args: argparse.Namespace) -> int:
    p = perm.parse_perm(args.perm)
    items = map(perm.format_perm, threads.entangled_partners(p, side=args.side))
    _emit(items, f"partners-{args.side}", perm.length(p), args.format)
    return 0


def _cmd_partners_layered(args: argparse.Namespace) -> int:
    layers = tuple(int(x) for x in args.spec.split(","))
    if args.side == "odd":
        out = entangle.layered_odd_partners(layers)
    else:
        out = entangle.layered_even_partners(layers)
    _emit(map(perm.format_perm, out), f"partners-layered-{args.side}", sum(layers), args.format)
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    g = threads.entanglement_graph(args.n)
    items = [
        f"{perm.format_perm(a)} | {perm.format_perm(b)}" for a, b in g.edges
    ]
    _emit(items, "entanglement-edge", args.n, args.format)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.what != "neen":
        raise SnowLeopardError(f"unknown count kind: {args.what}")
    print(catalan.count_neen_formula(args.n, args.k))
    return 0


Check = tuple[str, Callable[[], str | None]]


def _checks_tables(nmax: int) -> list[Check]:
    def slp_sets() -> str | None:
        for n, expect in TABLE_SLP.items():
            got = {perm.format_perm(p) for p in baxter.enumerate_slp(n)}
            if got != expect:
                return f"snow leopard permutations of length {n}: {sorted(got)}"
        return None

    def slp_counts() -> str | None:
        for k in range(0, min(nmax, 10) + 1):
            if len(baxter.enumerate_slp(2 * k - 1)) != baxter.catalan_number(k):
                return f"count at length {2 * k - 1}"
        return None

    def thread_counts() -> str | None:
        for n in range(-1, min(nmax, 6) + 1):
            if len(threads.even_threads(n)) != TABLE_ET[n]:
                return f"even-thread count at {n}"
            if len(threads.odd_threads(n)) != TABLE_OT[n]:
                return f"odd-thread count at {n}"
        return None

    def path_maps() -> str | None:
        for w, v in TABLE_PATH_TO_EVEN.items():
            if perm.format_perm(catalan.enne_to_even_thread(w)) != v:
                return f"even-thread value of {w!r}"
        for w, v in TABLE_PATH_TO_ODD.items():
            if perm.format_perm(catalan.neen_to_odd_thread(w)) != v:
                return f"odd-thread value of {w!r}"
        return None

    def janus_counts() -> str | None:
        for n in range(-1, min(nmax, 9) + 1):
            if len(motzkin.janus_threads(n)) != TABLE_JT[n]:
                return f"Janus count at {n}"
        for n in range(0, min(nmax + 1, 10) + 1):
            if len(motzkin.enumerate_peakless(n)) != TABLE_UD[n]:
                return f"peakless count at {n}"
            if motzkin.peakless_count(n) != TABLE_UD[n]:
                return f"peakless recurrence at {n}"
        return None

    return [
        ("snow leopard permutations of lengths 1, 3, 5", slp_sets),
        ("snow leopard counts are Catalan numbers", slp_counts),
        ("even/odd thread counts", thread_counts),
        ("small path-to-thread values", path_maps),
        ("Janus and peakless Motzkin counts", janus_counts),
    ]


def _checks_bijections(nmax: int) -> list[Check]:
    def round_trips() -> str | None:
        for n in range(0, min(nmax, 8) + 1):
            for w in catalan.enumerate_enne(n + 1):
                if catalan.even_thread_to_enne(catalan.enne_to_even_thread(w)) != w:
                    return f"path round trip fails at {w!r}"
            for a in threads.even_threads(n):
                if catalan.enne_to_even_thread(catalan.even_thread_to_enne(a)) != a:
                    return f"even-thread round trip fails at {a}"
            for w in catalan.enumerate_neen(n):
                if catalan.odd_thread_to_neen(catalan.neen_to_odd_thread(w)) != w:
                    return f"path round trip fails at {w!r}"
            for b in threads.odd_threads(n):
                if catalan.neen_to_odd_thread(catalan.odd_thread_to_neen(b)) != b:
                    return f"odd-thread round trip fails at {b}"
        return None

    def janus_maps() -> str | None:
        for n in range(-1, min(nmax, 9) + 1):
            images = set()
            for g in motzkin.janus_threads(n):
                w = motzkin.janus_to_peakless(g)
                if w != motzkin.janus_to_peakless_direct(g):
                    return f"recursive and direct maps differ at {g}"
                images.add(w)
            if images != set(motzkin.enumerate_peakless(n + 1)):
                return f"Janus map is not onto at {n}"
        return None

    return [
        ("thread/path round trips", round_trips),
        ("Janus map equals its direct description and is bijective", janus_maps),
    ]


def _checks_conjecture(nmax: int) -> list[Check]:
    def run() -> str | None:
        for n in range(0, min(nmax, 9) + 1):
            report = entangle.conjecture_check(n)
            if not report.ok:
                side, p, c = report.failures[0]
                return f"partner count {c} of {side} thread {perm.format_perm(p)}"
        return None

    return [("partner counts are Motzkin products", run)]


def _checks_canary(nmax: int) -> list[Check]:
    def run() -> str | None:
        for order in range(1, min(nmax, 4) + 1):
            for t in aztec.enumerate_tilings(order):
                large, small = aztec.lasm(t), aztec.sasm(t)
                if not (aztec.is_asm(large) and aztec.is_asm(small)):
                    return f"invalid ASM at order {order}"
                lp = aztec.is_permutation_matrix(large)
                sp = aztec.is_permutation_matrix(small)
                if lp:
                    bax = patterns.is_reduced_baxter(aztec.matrix_permutation(large))
                    if sp != bax:
                        return f"equivalence fails at order {order}"
                    if sp:
                        w = aztec.assemble_complete_baxter(t)
                        if baxter.reduce(w) != aztec.matrix_permutation(large):
                            return f"assembly projection fails at order {order}"
        return None

    return [("tiling matrices: validity, Baxter equivalence, assembly", run)]


def _checks_closure(nmax: int) -> list[Check]:
    def slp_closure() -> str | None:
        bound = min(nmax, 12)
        lengths = [l for l in range(-1, bound, 2)]
        for la in lengths:
            for lb in lengths:
                if la + lb + 1 > bound:
                    continue
                for p in baxter.enumerate_slp(la):
                    head = perm.skew_sum(p, (1,))
                    for s in baxter.enumerate_slp(lb):
                        if not baxter.is_slp(perm.skew_sum(head, s)):
                            return f"skew-closure fails at {p}, {s}"
        return None

    def thread_closure() -> str | None:
        bound = min(nmax, 8)
        for k in range(0, bound + 1):
            for l in range(0, bound + 1 - k):
                for b1 in threads.odd_threads(k):
                    for b2 in threads.odd_threads(l):
                        if not threads.is_odd_thread(perm.skew_sum(b1, b2)):
                            return f"odd-thread skew closure fails at {b1}, {b2}"
        return None

    return [
        ("snow leopard skew closure", slp_closure),
        ("odd-thread skew closure", thread_closure),
    ]


def _cmd_verify(args: argparse.Namespace) -> int:
    nmax = args.nmax
    suites = {
        "tables": _checks_tables,
        "bijections": _checks_bijections,
        "conjecture": _checks_conjecture,
        "canary": _checks_canary,
        "closure": _checks_closure,
    }
    if args.suite == "all":
        checks = [c for name in suites for c in suites[name](nmax)]
    else:
        checks = suites[args.suite](nmax)
    start = time.monotonic()
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(lambda c: (c[0], c[1]()), checks))
    else:
        results = [(name, fn()) for name, fn in checks]
    failed = 0
    for name, detail in results:
        if detail is None:
            print(f"PASS {name}")
        else:
            failed += 1
            print(f"FAIL {name}: {detail}")
    elapsed = time.monotonic() - start
    print(f"{len(results) - failed}/{len(results)} checks passed in {elapsed:.2f}s")
    return 1 if failed else 0


def _cmd_aztec(args: argparse.Namespace) -> int:
    if args.action == "enumerate":
        tilings = aztec.enumerate_tilings(args.order)
        if args.format == "count":
            print(len(tilings))
        else:
            for i, t in enumerate(tilings):
                print(f"# tiling {i}")
                print(aztec.format_tiling(t))
        return 0
    if args.action == "asm":
        t = aztec.enumerate_tilings(args.order)[args.index]
        for row in aztec.lasm(t):
            print(" ".join(f"{x:2d}" for x in row))
        print("--")
        for row in aztec.sasm(t):
            print(" ".join(f"{x:2d}" for x in row))
        return 0
    if args.action == "verify-canary":
        checks = _checks_canary(args.order)
        detail = checks[0][1]()
        if detail is None:
            print(f"PASS {checks[0][0]}")
            return 0
        print(f"FAIL {checks[0][0]}: {detail}")
        return 1
    raise SnowLeopardError(f"unknown aztec action: {args.action}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snowleopard",
        description="Enumerate, map, decompose, and verify snow leopard "
        "permutations, their threads, and the associated lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "jsonl", "count", "csv"), default="text")

    p = sub.add_parser("enumerate", help="list a family of objects")
    p.add_argument("kind", choices=("slp", "et", "ot", "jt", "enne", "neen", "ud", "inv3412", "tilings"))
    p.add_argument("--len", type=int, default=None, help="length (snow leopard permutations)")
    p.add_argument("--n", type=int, default=None, help="index n of the family")
    add_format(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("check", help="membership test")
    p.add_argument("what", choices=("slp",))
    p.add_argument("perm")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("decompose", help="canonical decompositions")
    p.add_argument("what", choices=("slp", "even", "odd"))
    p.add_argument("perm")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("map", help="apply one of the named bijections")
    p.add_argument("name", choices=sorted(_MAPS))
    p.add_argument("input")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("partners", help="entangled partners of a thread")
    p.add_argument("perm")
    p.add_argument("--side", choices=("even", "odd"), required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_partners)

    p = sub.add_parser("partners-layered", help="partner set of a layered thread")
    p.add_argument("--spec", required=True, help="comma-separated layer sizes, e.g. 2,2")
    p.add_argument("--side", choices=("even", "odd"), required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_partners_layered)

    p = sub.add_parser("graph", help="entanglement graph edges at level n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("what", choices=("neen",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("tables", "bijections", "conjecture", "canary", "closure", "all"))
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("aztec", help="Aztec diamond tilings and their matrices")
    p.add_argument("action", choices=("enumerate", "asm", "verify-canary"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--format", choices=("text", "count"), default="text")
    p.set_defaults(fn=_cmd_aztec)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SnowLeopardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
