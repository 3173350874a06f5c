"""Command-line interface: ``glidepoly <verb> ...``.

Exit status is 0 on success, 1 when the input is well formed but outside an
operation's domain, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import basis, genomic, grothendieck, pipedream, tableau, verify
from .composition import strong_composition, weak_composition
from .polyring import PolyZB


class DomainError(Exception):
    pass


class _Failed(str):
    """Output text of a command that ran but found a failing check."""


# argument parsers: raising ArgumentTypeError turns into exit status 2

def _composition(text):
    try:
        return weak_composition(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a weak composition: {text!r}") from None


def _strong(text):
    try:
        return strong_composition(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a strong composition: {text!r}") from None


def _perm(text):
    try:
        return pipedream.parse_permutation(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _partition(text):
    try:
        return tableau.partition(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from None


def _beta(text):
    if text == "sym":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--beta takes 'sym' or an integer, not {text!r}") from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


# output helpers

def _shape_str(a):
    return ",".join(map(str, a))


def _sorted_expansion(expansion):
    return sorted(
        ((idx, c) for idx, c in expansion.items() if c),
        key=lambda t: basis.glide_order_key(*t[0]),
        reverse=True,
    )


def _specialize_expansion(expansion, beta):
    if beta is None:
        return expansion
    out = Counter()
    for (k, a), c in expansion.items():
        out[basis.GlideIndex(0, a)] += c * beta ** k
    return {idx: c for idx, c in out.items() if c}


def _expansion_text(expansion):
    lines = []
    for idx, c in _sorted_expansion(expansion):
        lines.append(str(idx) if c == 1 else f"{c} {idx}")
    return "\n".join(lines) if lines else "0"


def _expansion_json(expansion):
    return [
        {"beta_power": k, "shape": list(a), "coeff": c}
        for (k, a), c in _sorted_expansion(expansion)
    ]


def _poly_out(p, args):
    if args.beta is not None:
        p = p.specialize_beta(args.beta)
    if args.json:
        return p.to_json()
    return str(p)


def _expansion_out(expansion, args):
    expansion = _specialize_expansion(expansion, args.beta)
    if args.json:
        return json.dumps(_expansion_json(expansion))
    return _expansion_text(expansion)


def _read_poly(source):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as err:
            raise DomainError(f"cannot read {source}: {err}") from None
    try:
        return PolyZB.from_json(text)
    except (ValueError, KeyError, TypeError) as err:
        raise argparse.ArgumentTypeError(f"not a polynomial in JSON form: {err}") from None


# verbs

def cmd_kpoly(args):
    w = args.perm
    if args.expand == "glide":
        return _expansion_out(grothendieck.glide_expansion(w), args)
    return _poly_out(grothendieck.grothendieck_poly(w), args)


def cmd_schubert(args):
    return _poly_out(grothendieck.schubert_poly(args.perm), args)


def cmd_glide(args):
    return _poly_out(basis.glide_poly(args.a), args)


def cmd_slide(args):
    return _poly_out(basis.slide_poly(args.a), args)


def cmd_fqs(args):
    _fits(args.a, args.n)
    return _poly_out(basis.fundamental_qs(args.a, args.n), args)


def cmd_multifqs(args):
    _fits(args.a, args.m)
    return _poly_out(basis.multifundamental_truncated(args.a, args.m), args)


def cmd_qglide(args):
    _fits(args.a, args.n)
    return _poly_out(basis.quasisym_glide(args.a, args.n), args)


def _fits(a, n):
    if len(a) > n:
        raise DomainError(f"composition {_shape_str(a)} has more than {n} parts")


def cmd_expand_glide(args):
    p = _read_poly(args.source)
    try:
        return _expansion_out(basis.expand_in_glide(p), args)
    except AssertionError as err:
        raise DomainError(str(err)) from None


def cmd_svt(args):
    ts = tableau.enumerate_qsvt(args.lam, args.n) if args.qy else tableau.enumerate_svt(args.lam, args.n)
    if args.json:
        return json.dumps([
            {"tableau": T.render(), "size": T.size, "weight": list(T.weight(args.n))} for T in ts
        ])
    return "\n".join(T.render() for T in ts)


def cmd_kpoly_sym(args):
    if len(args.lam) > args.n:
        raise DomainError(f"partition {_shape_str(args.lam)} has more than {args.n} parts")
    if args.expand == "glide":
        return _expansion_out(tableau.symmetric_glide_expansion(args.lam, args.n), args)
    return _poly_out(tableau.buch_poly(args.lam, args.n), args)


def _pd_list(pds, args):
    if args.json:
        return json.dumps([
            {"crosses": sorted(list(c) for c in P.crosses), "weight": list(P.weight), "excess": P.excess}
            for P in pds
        ])
    return "\n\n".join(P.render() for P in pds)


def cmd_pd(args):
    return _pd_list(pipedream.enumerate_pd(args.perm), args)


def cmd_qpd(args):
    return _pd_list(pipedream.enumerate_qpd(args.perm), args)


def _same_length(a, b):
    if len(a) != len(b):
        raise DomainError(f"compositions {_shape_str(a)} and {_shape_str(b)} differ in length")


def cmd_gss(args):
    _same_length(args.a, args.b)
    words = genomic.gss(args.a, args.b)
    if args.json:
        return json.dumps([genomic.format_word(C) for C in words])
    return "\n".join(genomic.format_word(C) for C in words)


def cmd_gprod(args):
    _same_length(args.a, args.b)
    return _expansion_out(genomic.glide_product_expansion(args.a, args.b), args)


def cmd_lr(args):
    return _expansion_out(genomic.lr_coefficients(args.u, args.v), args)


def cmd_verify(args):
    results = verify.run(args.level, args.threads)
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} suites passed")
    text = "\n".join(lines)
    return text if ok else _Failed(text)


def build_parser():
    parser = argparse.ArgumentParser(prog="glidepoly", description="Glide and beta-Grothendieck polynomial tools.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--beta", type=_beta, default=None, metavar="sym|INT",
                        help="keep beta formal (sym, the default) or substitute an integer")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    expand = dict(choices=["glide", "none"], default="none")

    p = verb("kpoly", cmd_kpoly, "beta-Grothendieck polynomial of a permutation")
    p.add_argument("perm", type=_perm)
    p.add_argument("--expand", **expand)
    p = verb("schubert", cmd_schubert, "Schubert polynomial of a permutation")
    p.add_argument("perm", type=_perm)
    for name, func, text in [("glide", cmd_glide, "glide polynomial"), ("slide", cmd_slide, "fundamental slide polynomial")]:
        p = verb(name, func, text)
        p.add_argument("a", type=_composition)
    p = verb("fqs", cmd_fqs, "fundamental quasisymmetric polynomial in n variables")
    p.add_argument("a", type=_strong)
    p.add_argument("n", type=_positive)
    p = verb("multifqs", cmd_multifqs, "multi-fundamental quasisymmetric function truncated to m variables")
    p.add_argument("a", type=_strong)
    p.add_argument("m", type=_positive)
    p = verb("qglide", cmd_qglide, "quasisymmetric glide polynomial in n variables")
    p.add_argument("a", type=_strong)
    p.add_argument("n", type=_positive)
    p = verb("expand-glide", cmd_expand_glide, "expand a JSON polynomial in the glide basis")
    p.add_argument("source", help="JSON file, inline JSON, or - for stdin")
    p = verb("svt", cmd_svt, "set-valued tableaux of shape lambda with entries at most n")
    p.add_argument("lam", type=_partition)
    p.add_argument("n", type=_positive)
    p.add_argument("--qy", action="store_true", help="only quasi-Yamanouchi tableaux")
    p = verb("kpoly-sym", cmd_kpoly_sym, "symmetric Grothendieck polynomial from set-valued tableaux")
    p.add_argument("lam", type=_partition)
    p.add_argument("n", type=_positive)
    p.add_argument("--expand", **expand)
    p = verb("pd", cmd_pd, "pipe dreams of a permutation")
    p.add_argument("perm", type=_perm)
    p = verb("qpd", cmd_qpd, "quasi-Yamanouchi pipe dreams of a permutation")
    p.add_argument("perm", type=_perm)
    p = verb("gss", cmd_gss, "genomic shuffle set of two compositions")
    p.add_argument("a", type=_composition)
    p.add_argument("b", type=_composition)
    p = verb("gprod", cmd_gprod, "glide expansion of G_a * G_b")
    p.add_argument("a", type=_composition)
    p.add_argument("b", type=_composition)
    p = verb("lr", cmd_lr, "glide expansion of K_u * K_v")
    p.add_argument("u", type=_perm)
    p.add_argument("v", type=_perm)
    p = verb("verify", cmd_verify, "run the identity suites")
    p.add_argument("--level", type=_positive, default=4)
    p.add_argument("--threads", type=_positive, default=None,
                   help=f"worker threads (default: ${verify.THREADS_ENV} or 1)")
    return parser


def run(argv):
    """Return ``(exit_status, stdout_text, stderr_text)``."""
    parser = build_parser()
    err = []

    class _Exit(Exception):
        pass

    def fail(message):
        err.append(f"{parser.prog}: error: {message}")
        raise _Exit()

    parser.error = fail
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            sp.error = fail
    try:
        args = parser.parse_args(argv)
    except _Exit:
        return 2, "", "\n".join(err) + "\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), "", ""
    try:
        text = args.func(args)
    except argparse.ArgumentTypeError as exc:
        return 2, "", f"{parser.prog}: error: {exc}\n"
    except DomainError as exc:
        return 1, "", f"{exc}\n"
    except (ValueError, genomic.InvariantViolation) as exc:
        return 1, "", f"{parser.prog}: {exc}\n"
    status = 1 if isinstance(text, _Failed) else 0
    text = str(text) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            return 1, "", f"{parser.prog}: cannot write {args.out}: {exc}\n"
        return status, "", ""
    return status, text, ""


def main(argv=None):
    status, out, errtext = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(errtext)
    return status
