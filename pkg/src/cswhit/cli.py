"""Command-line front end: ``cswhit <command> --fixture KEY ...``.

Coweights are comma-separated coordinates in the fixture's X_* basis
(``--lambda 1,1``).  Sequences are either flat lists chunked by rank
(``--lambda-seq 1,1`` is two coweights for a rank-1 fixture) or groups
separated by semicolons (``--lambda-seq "1,0;0,1"``).  Negative
coordinates need the ``=`` form: ``--nu=-1,0``.

Exit codes: 0 ok, 1 a verification check failed, 2 bad input, 3 a library
error (message printed verbatim).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import CswhitError, UnknownFixture
from .hecke import (
    HeckeElt,
    WhittakerElt,
    hecke_mult,
    verify_cs,
    whittaker_action,
    whittaker_action_geometric,
)
from .mvgeom import (
    breakdown,
    coh_weyl_orbit,
    coh_zero_orbit,
    conjectural_coh,
    main_theorem_coh,
    mv_dimension,
)
from .paths import count_paths_product, enumerate_dominant_paths, step_sequences
from .repcombinat import omega_set, tensor_decomposition
from .rootdata import DEFAULT_WEYL_CAP, RootDatum, fixture, fixture_keys, weyl_group


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


def parse_coweight(text: str, rank: int) -> tuple:
    try:
        v = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InputError(f"cannot parse coweight {text!r}") from None
    if len(v) != rank:
        raise InputError(f"coweight {text!r} has {len(v)} entries, fixture rank is {rank}")
    return v


def parse_sequence(text: str, rank: int) -> list:
    if ";" in text:
        groups = [g for g in text.split(";") if g.strip()]
        return [parse_coweight(g, rank) for g in groups]
    try:
        flat = [int(x) for x in re.split(r"[,\s]+", text.strip()) if x != ""]
    except ValueError:
        raise InputError(f"cannot parse sequence {text!r}") from None
    if not flat or len(flat) % rank:
        raise InputError(f"sequence {text!r} does not split into coweights of rank {rank}")
    return [tuple(flat[i:i + rank]) for i in range(0, len(flat), rank)]


def parse_word(text: str, rd: RootDatum) -> tuple:
    try:
        word = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise InputError(f"cannot parse Weyl word {text!r}") from None
    if any(not 0 <= i < rd.semisimple_rank for i in word):
        raise InputError(f"Weyl word {text!r} uses an index outside 0..{rd.semisimple_rank - 1}")
    return word


def weyl_element_from_word(rd: RootDatum, word: tuple):
    """The group element ``s_{i1} ... s_{ik}``; returned with its shortlex reduced word."""
    probe = [tuple(1 if j == k else 0 for j in range(rd.rank)) for k in range(rd.rank)]
    target = []
    for v in probe:
        for i in reversed(word):
            v = rd.reflect(i, v)
        target.append(v)
    for w in weyl_group(rd):
        if [w.act(v) for v in probe] == target:
            return w
    raise AssertionError("word not found in W")


def _load(args) -> RootDatum:
    rd = fixture(args.fixture)
    weyl_group(rd, args.weyl_cap)
    return rd


def _emit(obj):
    print(json.dumps(obj))


def _cw(v):
    return list(v)


# ---------------------------------------------------------------------------
# query commands
# ---------------------------------------------------------------------------


def cmd_omega(args):
    rd = _load(args)
    lam = parse_coweight(args.lam, rd.rank)
    _emit([_cw(v) for v in omega_set(rd, lam)])


def cmd_tensor(args):
    rd = _load(args)
    seq = parse_sequence(args.lambda_seq, rd.rank)
    table = tensor_decomposition(rd, seq)
    _emit([{"coweight": _cw(k), "multiplicity": m} for k, m in table.sorted_items(rd)])


def cmd_paths(args):
    rd = _load(args)
    seq = parse_sequence(args.lambda_seq, rd.rank)
    nu = parse_coweight(args.nu, rd.rank)
    paths = enumerate_dominant_paths(rd, seq, nu)
    if args.paths_cmd == "count":
        _emit(len(paths))
    elif args.paths_cmd == "product":
        _emit(sum(count_paths_product(rd, seq, s) for s in step_sequences(rd, seq, nu)))
    else:
        _emit([p.to_json() for p in paths])


def cmd_mvdim(args):
    rd = _load(args)
    _emit(mv_dimension(rd, parse_coweight(args.lam, rd.rank), parse_coweight(args.nu, rd.rank)))


def cmd_coh(args):
    rd = _load(args)
    cw = lambda s: parse_coweight(s, rd.rank)  # noqa: E731
    kind = args.coh_cmd
    if kind == "main":
        out = main_theorem_coh(rd, cw(args.lam), cw(args.nu))
    elif kind == "conj":
        out = conjectural_coh(rd, cw(args.lam), cw(args.nu), cw(args.mu))
    elif kind == "weyl":
        w = weyl_element_from_word(rd, parse_word(args.word, rd))
        out = coh_weyl_orbit(rd, cw(args.lam), w, cw(args.mu))
    elif kind == "zero":
        out = coh_zero_orbit(rd, cw(args.lam), cw(args.mu))
    else:
        out = breakdown(rd, parse_sequence(args.lambda_seq, rd.rank), cw(args.nu))
    _emit(out.to_mapping())


def cmd_hecke(args):
    rd = _load(args)
    cw = lambda s: parse_coweight(s, rd.rank)  # noqa: E731
    kind = args.hecke_cmd
    if kind == "mult":
        out = hecke_mult(rd, HeckeElt.basis_vector(rd, cw(args.a)), HeckeElt.basis_vector(rd, cw(args.b)))
        _emit(out.to_json(rd))
    elif kind == "act":
        nu, lam = cw(args.nu), cw(args.lam)
        if args.geometric:
            out = whittaker_action_geometric(rd, nu, lam)
        else:
            out = whittaker_action(rd, WhittakerElt.basis_vector(rd, nu), HeckeElt.basis_vector(rd, lam))
        _emit(out.to_json(rd))
    else:
        _emit(verify_cs(rd, cw(args.lam)))


def cmd_verify(args):
    from .verify import run_verification

    keys = args.fixture or fixture_keys()
    reports = []
    for key in keys:
        rd = fixture(key)
        weyl_group(rd, args.weyl_cap)
        reports.append(run_verification(rd, key, max_height=args.max_height))
    for r in reports:
        print(r.to_text())
    ok = all(r.ok for r in reports)
    print("ALL PASS" if ok else "FAILURES")
    if args.json:
        doc = {
            "reports": [r.to_json() for r in reports],
            "ok": ok,
        }
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weyl-cap", type=int, default=DEFAULT_WEYL_CAP,
                        help="refuse Weyl groups larger than this (default %(default)s)")

    query = argparse.ArgumentParser(add_help=False, parents=[common])
    query.add_argument("--fixture", required=True, help="fixture key, e.g. SL2, PGL2, A2adj, B2, C2, G2")

    p = argparse.ArgumentParser(prog="cswhit", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("omega", parents=[query], help="weights of V^lambda")
    s.add_argument("--lambda", dest="lam", required=True)
    s.set_defaults(func=cmd_omega)

    s = sub.add_parser("tensor", parents=[query], help="decompose a tensor product")
    s.add_argument("--lambda-seq", required=True)
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("paths", help="dominant lambda-bullet paths")
    ps = s.add_subparsers(dest="paths_cmd", required=True)
    for name in ("count", "list", "product"):
        t = ps.add_parser(name, parents=[query])
        t.add_argument("--lambda-seq", required=True)
        t.add_argument("--nu", required=True)
        t.set_defaults(func=cmd_paths)

    s = sub.add_parser("mvdim", parents=[query], help="dimension of an MV cycle")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--nu", required=True)
    s.set_defaults(func=cmd_mvdim)

    s = sub.add_parser("coh", help="graded cohomology answers")
    cs = s.add_subparsers(dest="coh_cmd", required=True)
    t = cs.add_parser("main", parents=[query])
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--nu", required=True)
    t = cs.add_parser("conj", parents=[query])
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--nu", required=True)
    t.add_argument("--mu", required=True)
    t = cs.add_parser("weyl", parents=[query])
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--word", default="", help="0-based simple reflection indices, e.g. 0,1")
    t.add_argument("--mu", required=True)
    t = cs.add_parser("zero", parents=[query])
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--mu", required=True)
    t = cs.add_parser("breakdown", parents=[query])
    t.add_argument("--lambda-seq", required=True)
    t.add_argument("--nu", required=True)
    for t in cs.choices.values():
        t.set_defaults(func=cmd_coh)

    s = sub.add_parser("hecke", help="Hecke algebra and Whittaker module")
    hs = s.add_subparsers(dest="hecke_cmd", required=True)
    t = hs.add_parser("mult", parents=[query])
    t.add_argument("--a", required=True)
    t.add_argument("--b", required=True)
    t = hs.add_parser("act", parents=[query])
    t.add_argument("--nu", required=True)
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--geometric", action="store_true", help="use the trace-of-Frobenius pipeline")
    t = hs.add_parser("cs", parents=[query])
    t.add_argument("--lambda", dest="lam", required=True)
    for t in hs.choices.values():
        t.set_defaults(func=cmd_hecke)

    s = sub.add_parser("verify", parents=[common], help="run the full verification matrix")
    s.add_argument("--fixture", action="append", help="repeatable; default: every fixture")
    s.add_argument("--max-height", type=int, default=4)
    s.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except (InputError, UnknownFixture) as exc:
        print(f"cswhit: error: {exc}", file=sys.stderr)
        return 2
    except CswhitError as exc:
        print(f"cswhit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
