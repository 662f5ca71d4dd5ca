"""Command-line front end.

Exit codes: 0 success, 1 a computation disagrees with a closed-form table
or an axiom check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .ext import (ExtProblem, ModuleSpec, borel_h1_dim, ext_dim, ext_ff_closed,
                  ext_simple_closed, ext_verma_closed, family_crosscheck)
from .gmod import check_module_axioms, check_weight_coherence, dump_module, load_module
from .kernel import format_scalar, parse_scalar
from .quiver import (build_block_quiver, classify_underlying_graph, components, emit_dot,
                     emit_tsv, wild_witness)
from .standard import (delta0_resolution, ext_family, feigin_fuchs, simple_module, verma,
                       verma_simplicity_scan)
from .tensor import BModule, DModule, build_tensor_module, parse_bmodule, simplicity_probe
from .uea import format_uea, parse_uea
from .whittaker import (format_matrix, gamma, gamma_exactness, h1_action, h1_basis, h1_member,
                        split_sequence)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _scalar(text):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _spec(text):
    try:
        return ModuleSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _range(text):
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like -6..6, got {text!r}")


def _write(path, text, out):
    if path in (None, "-"):
        out.write(text)
    else:
        Path(path).write_text(text)


def _list(items, out, everything=False, cap=20):
    shown = items if everything else items[:cap]
    for r in shown:
        out.write(f"  {r}\n")
    if len(shown) < len(items):
        out.write(f"  ... {len(items) - len(shown)} more (use --all)\n")


def _report_module(mod, args, out) -> int:
    res = check_module_axioms(mod)
    coh = check_weight_coherence(mod) if mod.weight_semisimple else []
    lo, hi = mod.window
    out.write(f"{mod.name}: {len(mod.basis)} basis vectors, window "
              f"{'*' if lo is None else lo}..{'*' if hi is None else hi}, gen {mod.gen}, "
              f"weight module {mod.weight_semisimple}\n")
    out.write(f"axiom residuals: {len(res)}\n")
    _list(res, out, args.all)
    for c in coh:
        out.write(f"  weight incoherence: {c}\n")
    if args.dump:
        _write(args.dump, dump_module(mod), out)
    return 1 if res or coh else 0


def cmd_module(args, out) -> int:
    if args.cmd == "verma":
        mod = verma(args.lam, args.window, args.gen)
    elif args.cmd == "ff":
        mod = feigin_fuchs(args.lam, args.window, args.gen)
    else:
        mod = simple_module(args.lam, args.window, args.gen)
    return _report_module(mod, args, out)


def cmd_family(args, out) -> int:
    mod = ext_family(args.id, args.lam, args.window, args.gen, variant=args.variant, sign=args.sign)
    code = _report_module(mod, args, out)
    if args.crosscheck:
        if not (mod.family[1].is_constant() and mod.family[2].is_constant()):
            raise UsageError("--crosscheck needs a numeric --lambda")
        cc = family_crosscheck(mod)
        out.write(f"solver: ext dim {cc['ext_dim']}, correction is a cocycle {cc['is_cocycle']}, "
                  f"coboundary {cc['is_coboundary']}, matches solver class {cc['matches']}\n")
        if not cc["matches"]:
            code = 1
    return code


def cmd_scan(args, out) -> int:
    for lam, i in verma_simplicity_scan(args.max_i):
        out.write(f"lambda={format_scalar(lam)}\ti={i}\n")
    return 0


def cmd_check(args, out) -> int:
    mod = load_module(Path(args.module).read_text())
    return _report_module(mod, argparse.Namespace(dump=None, all=args.all), out)


def cmd_ext(args, out) -> int:
    res = ext_dim(ExtProblem(args.top, args.sub, args.weight_only, args.gen, args.window))
    out.write(f"Ext^1({args.top}, {args.sub}) {'weight' if args.weight_only else 'all'}: {res}\n")
    table = None
    if args.top.kind == args.sub.kind and args.weight_only and args.top.kind in ("verma", "simple"):
        f = ext_verma_closed if args.top.kind == "verma" else ext_simple_closed
        table = f(args.top.lam, args.sub.lam)
    elif args.top.kind == args.sub.kind == "ff" and not args.weight_only:
        table = ext_ff_closed(args.top.lam, args.sub.lam)
    if table is not None:
        out.write(f"closed form: {table}\n")
        if table != res.ext_dim:
            return 1
    return 0


def cmd_ext_table(args, out) -> int:
    base = args.block
    a, b = args.range
    closed = ext_verma_closed if args.kind == "verma" else ext_simple_closed
    rows = ["mu\tlambda\tdim_closed\tdim_solver\tstabilized"]
    mismatch = False
    for n in range(a, b + 1):
        for k in range(a, b + 1):
            if n == k or abs(n - k) > args.max_gap:
                continue
            mu, lam = base + n, base + k
            dc = closed(mu, lam) if args.mode in ("closed", "both") else None
            ds = st = None
            if args.mode in ("solver", "both"):
                r = ext_dim(ExtProblem(ModuleSpec(args.kind, mu), ModuleSpec(args.kind, lam),
                                       True, None, args.window))
                ds, st = r.ext_dim, r.stabilized
            if dc is not None and ds is not None and (dc != ds or not st):
                mismatch = True
            rows.append("\t".join([format_scalar(mu), format_scalar(lam),
                                   "-" if dc is None else str(dc), "-" if ds is None else str(ds),
                                   "-" if st is None else str(st).lower()]))
    _write(args.out, "\n".join(rows) + "\n", out)
    return 1 if mismatch else 0


def cmd_borel(args, out) -> int:
    out.write(f"{borel_h1_dim(args.lam, args.bound)}\n")
    return 0


def cmd_quiver(args, out) -> int:
    q = build_block_quiver(args.base, args.half_width, args.mode, args.window)
    comps = components(q)
    out.write(f"block {format_scalar(args.base)}: {len(q.vertices)} vertices, "
              f"{sum(q.arrows.values())} arrows, {len(comps)} component(s)\n")
    if args.dot:
        _write(args.dot, emit_dot(q), out)
    if args.tsv:
        _write(args.tsv, emit_tsv(q), out)
    if args.witness:
        w = wild_witness(q, mu=args.mu)
        if w is None:
            out.write("no wild witness found\n")
        else:
            out.write("wild witness on {" + ", ".join(format_scalar(v) for v in w.vertices) + "}: "
                      + classify_underlying_graph(w).tag + "\n")
            for (s, t), m in w.arrow_list():
                out.write(f"  {format_scalar(s)} -> {format_scalar(t)}" + (f" x{m}" if m > 1 else "") + "\n")
    return 0


def cmd_h1(args, out) -> int:
    if args.member is not None:
        u = parse_uea(args.member)
        out.write(f"{str(h1_member(u)).lower()}\n")
    elif args.basis:
        for u in h1_basis(args.deg):
            out.write(format_uea(u) + "\n")
    else:
        raise UsageError("h1 needs --member ELEMENT or --basis --deg N")
    return 0


def cmd_gamma(args, out) -> int:
    g = gamma(args.module, args.window, args.gen)
    out.write(f"Gamma({args.module}): dim {g.dim}, stabilized {g.stabilized}, "
              f"representatives {', '.join(map(str, g.representatives)) or '-'}\n")
    if args.act:
        out.write(format_matrix(h1_action(parse_uea(args.act), g)) + "\n")
    return 0


def cmd_gamma_exact(args, out) -> int:
    if args.preset == "delta0":
        seq = delta0_resolution(args.window)
    else:
        seq = split_sequence(verma(1, args.window), verma(2, args.window + 1))
    rep = gamma_exactness(seq)
    out.write(f"{rep}\n")
    return 0 if rep.exact else 1


def _p_module(text, window):
    kind, _, a = text.partition(":")
    size = int(a) if a else window
    if kind == "poly":
        return DModule.poly(size)
    if kind == "s":
        return DModule.s(size)
    raise UsageError(f"--p must be poly:A or s:A, got {text!r}")


def _v_module(text, window):
    if text.startswith("preset:"):
        name = text[len("preset:"):]
        if name == "whittaker":
            return BModule.whittaker_band(window)
        if name == "laurent":
            return BModule.laurent_band(window)
        if name.startswith("const:"):
            return BModule.one_dim(parse_scalar(name[len("const:"):]))
        raise UsageError(f"unknown preset {name!r} (whittaker, laurent, const:<lambda>)")
    return parse_bmodule(Path(text).read_text())


def cmd_tensor(args, out) -> int:
    p = _p_module(args.p, args.window)
    v = _v_module(args.v, args.window)
    t = build_tensor_module(p, v, args.gen)
    out.write(f"{t.name}: {len(t.basis)} basis vectors, axiom residuals {len(t.residuals)}\n")
    _list(t.residuals, out, args.all)
    spec = t.d0_spectrum()
    if spec is None:
        out.write("d0 is not diagonal on this basis\n")
    else:
        key = (lambda s: -float(s.constant())) if all(s.is_constant() for s in spec) else format_scalar
        out.write("d0 spectrum: " + " ".join(format_scalar(s) for s in sorted(spec, key=key)) + "\n")
    if args.probe:
        seed = (p.exps[0] if p.kind == "poly" else p.exps[-1], v.ids[len(v.ids) // 2])
        out.write(f"probe from x^{seed[0]} (x) v{seed[1]}: {simplicity_probe(t, seed)}\n")
    return 1 if t.residuals else 0


def cmd_selftest(args, out) -> int:
    from .acceptance import run_all
    ok = run_all(lambda line: out.write(line + "\n"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="wittrep", description="Exact computations with modules over the Witt algebra.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def mod_flags(p, need_lambda=True):
        p.add_argument("--lambda", dest="lam", type=_scalar, required=need_lambda,
                       help="weight: scalar literal such as 1/3, 5/2+1/2r19, or L (symbolic)")
        p.add_argument("--window", type=int, default=16, help="truncation depth")
        p.add_argument("--gen", type=int, default=8, help="largest generator index stored")
        p.add_argument("--dump", metavar="PATH", help="write the module dump ('-' for stdout)")
        p.add_argument("--all", action="store_true", help="list every axiom residual")

    for name, hlp in (("verma", "Verma module"), ("ff", "Feigin-Fuchs module"),
                      ("simple", "simple highest-weight module")):
        p = sub.add_parser(name, help=hlp)
        mod_flags(p)
        p.set_defaults(fn=cmd_module)

    p = sub.add_parser("family", help="non-split extension between Feigin-Fuchs modules")
    p.add_argument("--id", type=int, required=True, choices=range(1, 9))
    p.add_argument("--variant", choices=["plain", "prime", "printed", "corrected"])
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")
    p.add_argument("--crosscheck", action="store_true", help="compare with the Ext solver")
    mod_flags(p, need_lambda=False)
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("scan-simplicity", help="weights with singular vectors in Verma modules")
    p.add_argument("--max-i", type=int, default=50)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("check", help="axiom check of a dumped module")
    p.add_argument("--module", required=True, metavar="PATH")
    p.add_argument("--all", action="store_true", help="list every axiom residual")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("ext", help="Ext^1(top, sub) by the cocycle solver")
    p.add_argument("--top", type=_spec, required=True, help="verma:L | ff:L | simple:L | trivial")
    p.add_argument("--sub", type=_spec, required=True)
    p.add_argument("--weight-only", action="store_true")
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--gen", type=int, default=None)
    p.set_defaults(fn=cmd_ext)

    p = sub.add_parser("ext-table", help="TSV of Ext^1 dimensions over a block")
    p.add_argument("--block", type=_scalar, required=True)
    p.add_argument("--range", type=_range, required=True, metavar="A..B")
    p.add_argument("--mode", choices=["closed", "solver", "both"], default="both")
    p.add_argument("--kind", choices=["simple", "verma"], default="simple")
    p.add_argument("--max-gap", type=int, default=6)
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--out", metavar="PATH", help="TSV destination (default stdout)")
    p.set_defaults(fn=cmd_ext_table)

    p = sub.add_parser("borel-h1", help="dim H^1(b, Hom(C_lambda, L(0)))")
    p.add_argument("--lambda", dest="lam", type=_scalar, required=True)
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(fn=cmd_borel)

    p = sub.add_parser("quiver", help="Ext-quiver of a block")
    p.add_argument("--base", type=_scalar, required=True)
    p.add_argument("--half-width", type=int, default=6)
    p.add_argument("--mode", choices=["closed", "solver"], default="closed")
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--tsv", metavar="PATH")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--mu", type=_scalar, help="preferred top vertex of the wild pattern")
    p.set_defaults(fn=cmd_quiver)

    p = sub.add_parser("h1", help="the algebra H_1")
    p.add_argument("--member", metavar="ELEMENT", help='e.g. "d(0)*d(0)+d(0)-d(1)"')
    p.add_argument("--basis", action="store_true")
    p.add_argument("--deg", type=int, default=2)
    p.set_defaults(fn=cmd_h1)

    p = sub.add_parser("gamma", help="Gamma(M) = M/(d(-1)-1)M")
    p.add_argument("--module", type=_spec, required=True)
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--gen", type=int, default=8)
    p.add_argument("--act", metavar="ELEMENT", help="H_1 element whose action to print")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("gamma-exact", help="exactness of Gamma on a short exact sequence")
    p.add_argument("--preset", choices=["delta0", "split"], default="delta0")
    p.add_argument("--window", type=int, default=12)
    p.set_defaults(fn=cmd_gamma_exact)

    p = sub.add_parser("tensor", help="tensor module T(P, V)")
    p.add_argument("--p", required=True, help="poly:A or s:A")
    p.add_argument("--v", required=True,
                   help="b-module file, or preset:whittaker | preset:laurent | preset:const:<lambda>")
    p.add_argument("--window", type=int, default=10, help="size used when A or B is omitted")
    p.add_argument("--gen", type=int, default=4)
    p.add_argument("--probe", action="store_true")
    p.add_argument("--all", action="store_true", help="list every axiom residual")
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(fn=cmd_selftest)
    return ap


def _glue_range(argv):
    # "--range -6..6" would otherwise be read as a flag
    out, it = [], iter(argv)
    for a in it:
        out.append(f"--range={next(it, '')}" if a == "--range" else a)
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(_glue_range(sys.argv[1:] if argv is None else argv))
    try:
        return args.fn(args, out)
    except (UsageError, ValueError, FileNotFoundError) as exc:
        sys.stderr.write(f"wittrep {args.cmd}: error: {exc}\n")
        return 2


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
