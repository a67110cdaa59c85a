"""Command-line surface.

Subcommands: alg-check, dims, classify, torsion, verify, gen.
Exit codes: 0 success / all checks pass; 1 check failures; 2 file or parse
errors; 3 internal precondition refusals.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import build_bound_quiver_algebra
from .errors import ParseError, PreconditionError, QuiverhomError
from .gorenstein import classify
from .homology import DEFAULT_BOUND, dims as hom_dims, is_projective
from .io import gen_cyclic_example, parse_algebra_file, parse_module_file
from .modules import injective, is_isomorphic, projective, simple
from .subcats import (
    ar_sequence, class_module, ext_injectives, ext_projectives,
    indecomposables, realized, torsion_pair, SubcatSpec,
)
from .verify import run_verify


def _load_algebra(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    pres, field = parse_algebra_file(text)
    return build_bound_quiver_algebra(pres, field)


def _parse_mode(mode: str):
    if mode == "nakayama":
        return "nakayama", 4
    if mode.startswith("exhaustive:"):
        return "exhaustive", int(mode.split(":", 1)[1])
    raise ParseError(f"bad --mode {mode!r} (nakayama or exhaustive:<d>)")


def cmd_alg_check(args) -> int:
    a = _load_algebra(args.alg)
    print(f"dim={a.dim} p={a.field.p} vertices={a.nblocks} "
          f"radical_dim={a.radical.dim} loewy={a.loewy_length}")
    print("basis: " + " ".join(a.labels))
    for i in range(a.nblocks):
        pi, ii = projective(a, i), injective(a, i)
        print(f"vertex {a.block_labels[i]}: dim P={pi.total} dim I={ii.total}")
    return 0


def cmd_dims(args) -> int:
    a = _load_algebra(args.alg)
    bound = args.bound
    rows = []
    if args.module:
        with open(args.module, "r", encoding="utf-8") as fh:
            m = parse_module_file(fh.read(), a)
        rows.append(("module", m))
    else:
        for i in range(a.nblocks):
            rows.append((f"P({a.block_labels[i]})", projective(a, i)))
        for i in range(a.nblocks):
            rows.append((f"I({a.block_labels[i]})", injective(a, i)))
        for i in range(a.nblocks):
            rows.append((f"S({a.block_labels[i]})", simple(a, i)))
    for name, m in rows:
        pdv, idv = hom_dims(m, bound)
        print(f"{name}: pd={pdv} id={idv}")
    return 0


def cmd_classify(args) -> int:
    a = _load_algebra(args.alg)
    print(classify(a, args.bound).summary())
    return 0


def cmd_torsion(args) -> int:
    a = _load_algebra(args.alg)
    report = classify(a, args.bound)
    n = args.n if args.n is not None else (
        report.n_minimal_AG if report.n_minimal_AG is not None else 1)
    mode, d = _parse_mode(args.mode)
    indlist = indecomposables(a, mode, d)
    tp = torsion_pair(a, n, indlist, report, args.bound)
    t_names = [indlist.items[i].name for i in tp.torsion.members]
    f_names = [indlist.items[i].name for i in tp.torsion_free.members]
    print(f"torsion class: {{{', '.join(t_names)}}}")
    print(f"torsion-free class: {{{', '.join(f_names)}}}")
    print(f"hereditary={tp.hereditary} maximality={tp.maximality}")
    ep = ext_projectives(indlist, tp.torsion_free)
    ei = ext_injectives(indlist, tp.torsion_free)
    print("Ext-projectives: "
          + ", ".join(indlist.items[i].name for i in ep))
    print("Ext-injectives: "
          + ", ".join(indlist.items[i].name for i in ei))
    for x in indlist.items:
        if is_projective(x):
            continue
        seq = ar_sequence(x, indlist)
        print(f"AR sequence: 0 -> {indlist.sum_name(seq.left)} -> "
              f"{indlist.sum_name(seq.middle)} -> {seq.right.name} -> 0")
    return 0


def cmd_verify(args) -> int:
    a = _load_algebra(args.alg)
    mode, d = _parse_mode(args.mode)
    rep = run_verify(a, args.n, mode, d, args.bound)
    lines = rep.machine_lines() if args.out == "machine" else rep.text_lines()
    for line in lines:
        print(line)
    return rep.exit_status


def cmd_gen(args) -> int:
    sys.stdout.write(gen_cyclic_example(args.n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverhom",
        description="Exact homological invariants and Auslander-Gorenstein "
                    "classification for bound quiver algebras over GF(p).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, module_flag=False):
        sp.add_argument("--alg", required=True, help="algebra file")
        if module_flag:
            sp.add_argument("--module", help="module file")
        sp.add_argument("-n", type=int, default=None,
                        help="parameter n (default: classifier's)")
        sp.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                        help="resolution step bound (default 64)")
        sp.add_argument("--mode", default="nakayama",
                        help="nakayama | exhaustive:<d>")
        sp.add_argument("--out", choices=("text", "machine"), default="text")

    sp = sub.add_parser("alg-check", help="print basis and Loewy data")
    common(sp)
    sp.set_defaults(func=cmd_alg_check)

    sp = sub.add_parser("dims", help="pd/id table")
    common(sp, module_flag=True)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("classify", help="print the classification report")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("torsion",
                        help="torsion pair, Ext-objects, AR sequences")
    common(sp)
    sp.set_defaults(func=cmd_torsion)

    sp = sub.add_parser("verify", help="run the full verification suite")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="emit a cyclic example algebra file")
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except QuiverhomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
