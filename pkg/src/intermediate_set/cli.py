"""Command line interface.

Exit status: 0 on success, 1 on an input error (a JSON error object goes to
stderr), 2 when a requested cross-check finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import oracle, solutions
from .classify import PROPERTIES, SOLUTIONS, classify, property_suite
from .families import SimpleGame, glove_relabeled, parse_minimal_winning
from .game import (
    DEFAULT_MAX_N,
    Game,
    GameError,
    format_rational,
    game_to_json,
    parse_coalition,
    parse_game,
    parse_rational,
    unanimity_game,
)
from .generators import random_game
from .geometry import GeometryError, PolyUnion, VPolytope, set_equal
from .lovasz import lovasz_eval
from .plot import plot_svg
from .serialize import (
    dumps,
    emitted_vertices,
    load_set,
    polytope_to_json,
    rationals,
    union_to_json,
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1), keeping exit 2 for mismatches
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


class MismatchError(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


# -- input sources -----------------------------------------------------------

def _source_args(p: argparse.ArgumentParser, multiple: bool = False) -> None:
    g = p.add_argument_group("game source (exactly one)")
    if multiple:
        g.add_argument("--game", metavar="FILE", action="append", help="game file; repeat for several games")
    else:
        g.add_argument("--game", metavar="FILE", help="game file (JSON); '-' reads stdin")
    g.add_argument("--glove", metavar="P,Q", help="glove game with P left and Q right glove holders")
    g.add_argument("--simple", metavar="E1;E2", help='simple game from minimal winning coalitions, e.g. "1,2;1,3"')
    g.add_argument("--unanimity", metavar="T", help='unanimity game of coalition T, e.g. "1,2" (needs --n)')
    g.add_argument("--random", metavar="N", type=int, help="random rational game on N players (needs --seed)")
    if multiple:
        g.add_argument("--count", type=int, default=1, help="number of random games (default 1)")
    g.add_argument("--n", type=int, help="player count for --unanimity and --simple")
    g.add_argument("--seed", type=int, help="seed for --random and for randomized checks")
    g.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="player-count cap (default 8)")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"expected two integers P,Q, got {text!r}") from None
    return a, b


def _games(args) -> list[Game]:
    chosen = [k for k in ("game", "glove", "simple", "unanimity", "random") if getattr(args, k, None) is not None]
    if len(chosen) != 1:
        raise InputError("give exactly one game source: --game, --glove, --simple, --unanimity or --random")
    kind = chosen[0]
    max_n = args.max_n
    if kind == "game":
        paths = args.game if isinstance(args.game, list) else [args.game]
        games = [parse_game(_read(p), max_n=max_n) for p in paths]
    elif kind == "glove":
        p, q = _pair(args.glove)
        if p < 1 or q < 1:
            raise InputError("glove games need at least one holder of each kind")
        n = p + q
        if n > max_n:
            raise InputError(f"p+q={n} exceeds --max-n={max_n}")
        games = [glove_relabeled(range(1, p + 1), range(p + 1, n + 1))[0]]
    elif kind == "simple":
        n, masks = parse_minimal_winning(args.simple, args.n)
        games = [SimpleGame.from_minimal_winning(n, masks).game()]
    elif kind == "unanimity":
        if args.n is None:
            raise InputError("--unanimity needs --n")
        games = [unanimity_game(args.n, parse_coalition(args.unanimity, args.n))]
    else:
        if args.seed is None:
            raise InputError("--random needs --seed for reproducibility")
        count = getattr(args, "count", 1)
        rng = random.Random(args.seed)
        games = [random_game(args.random, rng) for _ in range(count)]
    for v in games:
        if v.n > max_n:
            raise InputError(f"n={v.n} exceeds --max-n={max_n}")
    return games


def _game(args) -> Game:
    return _games(args)[0]


# -- subcommands -------------------------------------------------------------

def cmd_eval(args):
    v = _game(args)
    try:
        x = tuple(parse_rational(t) for t in args.x.split(","))
    except GameError as exc:
        raise InputError(str(exc)) from None
    if len(x) != v.n:
        raise InputError(f"point has {len(x)} coordinates, game has {v.n} players")
    return {"x": rationals(x), "value": format_rational(lovasz_eval(v, x))}


def cmd_core(args):
    return polytope_to_json(solutions.core(_game(args)), emit_h=args.emit_h)


def cmd_imputations(args):
    return polytope_to_json(solutions.imputations(_game(args)), emit_h=args.emit_h)


def cmd_weber(args):
    return polytope_to_json(solutions.weber(_game(args)), emit_h=args.emit_h)


def cmd_intermediate(args):
    v = _game(args)
    method = solutions.CHAINS if args.method == "chains" else solutions.MARGINAL_CORES
    try:
        M = solutions.intermediate(v, method, verify=args.verify, max_n=args.max_n)
    except solutions.VerificationError as exc:
        raise MismatchError(str(exc)) from None
    if args.minimal:
        M = solutions.minimal_components(M)
    out = union_to_json(M)
    out["method"] = args.method
    if args.verify:
        out["verified"] = True
    return out


def cmd_classify(args):
    return classify(_game(args)).to_json()


def cmd_properties(args):
    games = _games(args)
    props = args.property or list(PROPERTIES)
    return property_suite(games, args.solution, seed=args.seed or 0, properties=props)


def _diff(A, B) -> dict:
    def verts(S):
        if isinstance(S, PolyUnion):
            return S.vertex_set()
        if isinstance(S, VPolytope):
            return list(S.points)
        return S.vertex_list()

    return {
        "only_in_oracle": [rationals(p) for p in verts(A) if not B.contains(p)],
        "only_in_solution": [rationals(p) for p in verts(B) if not A.contains(p)],
    }


def cmd_oracle(args):
    v = _game(args)
    at = oracle.ZERO if args.at == "zero" else oracle.GRAND
    if args.check == "intersection":
        inter, same = oracle.intersection_query(v, at=at)
        return {
            "check": "intersection",
            "at": args.at,
            "equals_core": same,
            "intersection": polytope_to_json(inter),
        }
    if args.check == "intermediate":
        A = oracle.limiting_superdiff(v, at, max_n=args.max_n)
        B = solutions.intermediate(v, max_n=args.max_n)
    elif args.check == "core":
        A = oracle.frechet_superdiff(v, (Fraction(int(at == oracle.GRAND)),) * v.n)
        B = solutions.core(v)
    else:
        A = oracle.clarke_superdiff(v)
        B = solutions.weber(v)
    ok = set_equal(A, B)
    out = {"check": args.check, "at": args.at, "status": "pass" if ok else "fail"}
    if not ok:
        out.update(_diff(A, B))
        raise MismatchError(f"oracle and solution disagree on {args.check}", out)
    return out


def cmd_plot(args):
    return plot_svg(_game(args), minimal=not args.all_components)


def cmd_glove(args):
    if args.left < 1 or args.right < 1:
        raise InputError("glove games need at least one holder of each kind")
    n = args.left + args.right
    if n > args.max_n:
        raise InputError(f"p+q={n} exceeds --max-n={args.max_n}")
    v = glove_relabeled(range(1, args.left + 1), range(args.left + 1, n + 1))[0]
    return game_to_json(v)


def cmd_simple(args):
    n, masks = parse_minimal_winning(args.minimal_winning, args.n)
    if n > args.max_n:
        raise InputError(f"n={n} exceeds --max-n={args.max_n}")
    return game_to_json(SimpleGame.from_minimal_winning(n, masks).game())


def cmd_contains(args):
    try:
        doc = json.loads(_read(args.set))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    S = load_set(doc)
    if args.point:
        points = []
        for text in args.point:
            x = tuple(parse_rational(t) for t in text.split(","))
            if len(x) != S.n:
                raise InputError(f"point has {len(x)} coordinates, expected {S.n}")
            points.append(x)
    else:
        points = emitted_vertices(doc)
    results = [{"point": rationals(x), "contains": S.contains(x)} for x in points]
    return {"results": results, "all": all(r["contains"] for r in results)}


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="intermediate-set",
        description="Exact core, Weber set and intermediate set of TU games.",
    )
    parser.add_argument("-o", "--output", metavar="FILE", help="write the result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, source=True, multiple=False):
        p = sub.add_parser(name, help=help_)
        if source:
            _source_args(p, multiple)
        p.add_argument("-o", "--output", metavar="FILE", default=argparse.SUPPRESS, help="output file")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "value of the Lovasz extension at a point")
    p.add_argument("--x", required=True, help='comma separated rationals, e.g. "1,1/2,0"')
    for name, func, text in (
        ("core", cmd_core, "the core"),
        ("imputations", cmd_imputations, "the imputation set"),
        ("weber", cmd_weber, "the Weber set"),
    ):
        p = add(name, func, text)
        p.add_argument("--emit-h", action="store_true", help="include inequality rows for vertex-form sets")
    p = add("intermediate", cmd_intermediate, "the intermediate set, one component per chain")
    p.add_argument("--method", choices=["chains", "cores"], default="chains")
    p.add_argument("--verify", action="store_true", help="cross-check against the other method (exit 2 on mismatch)")
    p.add_argument("--minimal", action="store_true", help="drop components contained in another component")
    p.add_argument("--emit-h", action="store_true", help="accepted for symmetry; components always carry rows")
    add("classify", cmd_classify, "structural predicates of a game")
    p = add("properties", cmd_properties, "run the solution property suite", multiple=True)
    p.add_argument("--solution", choices=list(SOLUTIONS), default="intermediate")
    p.add_argument("--property", action="append", choices=list(PROPERTIES), help="restrict to these properties")
    p = add("oracle", cmd_oracle, "compare a superdifferential oracle with the matching solution")
    p.add_argument(
        "--check",
        choices=["intermediate", "weber", "core", "intersection"],
        default="intermediate",
        help="intersection: experimental, meets the maximal limiting components and compares with the core",
    )
    p.add_argument("--at", choices=["zero", "grand"], default="grand")
    p = add("plot", cmd_plot, "SVG of core, intermediate set and Weber set (n = 3)")
    p.add_argument("--all-components", action="store_true", help="draw every intermediate component, not only maximal ones")
    p = add("glove", cmd_glove, "emit a glove game file", source=False)
    p.add_argument("--left", type=int, required=True)
    p.add_argument("--right", type=int, required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p = add("simple", cmd_simple, "emit a simple game file", source=False)
    p.add_argument("--minimal-winning", required=True, help='e.g. "1,2;1,3"')
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p = add("contains", cmd_contains, "membership in an emitted polytope or union", source=False)
    p.add_argument("--set", default="-", metavar="FILE", help="polytope or union JSON (default stdin)")
    p.add_argument("--point", action="append", help="point to test; default: every emitted vertex")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, message: str, payload=None) -> None:
    body = {"error": kind, "message": message}
    if payload is not None:
        body["detail"] = payload
    sys.stderr.write(json.dumps(body) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except MismatchError as exc:
        _error("mismatch", str(exc), exc.payload)
        return 2
    except (InputError, GameError, GeometryError, ValueError) as exc:
        _error("input", str(exc))
        return 1
    text = result if isinstance(result, str) else dumps(result)
    try:
        _emit(text, getattr(args, "output", None))
    except OSError as exc:
        _error("input", f"cannot write output: {exc.strerror}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
