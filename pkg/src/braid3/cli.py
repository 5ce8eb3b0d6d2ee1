"""Command-line interface: ``braid3 <command> ...``.

Words are given in letter form (``aBAb``; a = sigma_1, A = its inverse,
b/B likewise) or numeric form (``"1,-2,2"``; put ``--`` before a word that
starts with a minus sign).  An argument ``@path`` reads words from a
newline-delimited file: one-word commands run once per line, two-word
commands expect the file to hold a single word.

Exit codes: 0 on success (including a negative decision), 1 on malformed
input, 2 when an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .burau import burau, burau_mod_p, integral_burau
from .conjugacy import are_conjugate, burau_dichotomy, word_problem_equal
from .errors import ConsistencyError, InputError
from .harness import bench_conjugacy
from .laurent import check_modulus
from .modular import INFINITY, braid_to_modular, modular_to_matrix, pi_invariant
from .moody import moody, moody_mod_p
from .proptest import run_suite
from .words import BraidWord, parse_braid


class _Usage(InputError):
    pass


def _read_words(arg: str) -> list[str]:
    if not arg.startswith("@"):
        return [arg]
    try:
        with open(arg[1:], encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        raise _Usage(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    return [ln for ln in lines if ln]


def _words(arg: str) -> list[BraidWord]:
    return [parse_braid(w) for w in _read_words(arg)]


def _one_word(arg: str) -> BraidWord:
    words = _words(arg)
    if len(words) != 1:
        raise _Usage(f"{arg} must contain exactly one word, found {len(words)}")
    return words[0]


def _ext_json(x):
    if x is INFINITY:
        return "inf"
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _ext_str(x) -> str:
    return "inf" if x is INFINITY else str(x)


# -- commands -------------------------------------------------------------------------

def cmd_burau(args) -> tuple[object, str]:
    out_json, out_text = [], []
    modulus = None if args.mod is None else check_modulus(args.mod)
    for w in _words(args.word):
        if args.at is not None:
            if args.at != -1:
                raise _Usage("--at only supports -1")
            m = integral_burau(w)
        elif modulus is not None:
            m = burau_mod_p(w, modulus)
        else:
            m = burau(w)
        out_json.append({"word": str(w), "matrix": m.to_json()})
        out_text.append(str(m))
    return _single(out_json), "\n".join(out_text)


def cmd_psl2(args):
    out_json, out_text = [], []
    for w in _words(args.word):
        m = braid_to_modular(w)
        rec = {"word": str(w), "normal_form": list(m.syllables), "normal_form_str": str(m)}
        line = str(m)
        if args.matrix:
            mat = modular_to_matrix(m)
            rec["matrix"] = mat.to_json()
            line += f"  {mat}"
        out_json.append(rec)
        out_text.append(line)
    return _single(out_json), "\n".join(out_text)


def cmd_pi(args):
    out_json, out_text = [], []
    for w in _words(args.word):
        v = pi_invariant(w)
        out_json.append({"word": str(w), "pi": _ext_json(v)})
        out_text.append(_ext_str(v))
    return _single(out_json), "\n".join(out_text)


def cmd_moody(args):
    out_json, out_text = [], []
    modulus = None if args.mod is None else check_modulus(args.mod)
    for w in _words(args.word):
        r = moody(w)
        rec = {"word": str(w), **r.to_json()}
        line = str(r.polynomial)
        if modulus is not None:
            reduced = moody_mod_p(w, modulus)
            rec["polynomial_mod_p"] = reduced.to_json()
            rec["modulus"] = modulus
            line = f"{reduced} (mod {modulus})"
        if args.cp:
            line += f"  cp={list(r.cp_sequence)}"
        out_json.append(rec)
        out_text.append(line)
    return _single(out_json), "\n".join(out_text)


def cmd_conjugate(args):
    phi, psi = _one_word(args.w1), _one_word(args.w2)
    verdict = are_conjugate(phi, psi)
    text = verdict.decision.value
    if not verdict.conjugate:
        text += f" ({verdict.separating_invariant.value})"
    elif args.witness:
        text += f" witness={verdict.witness}"
    return verdict.to_json(), text


def cmd_dichotomy(args):
    report = burau_dichotomy(_one_word(args.w1), _one_word(args.w2))
    text = (
        f"branch1={report.branch1} branch2={report.branch2.value} "
        f"gl_conjugacy_refuted={report.gl_conjugacy_refuted}"
    )
    return report.to_json(), text


def cmd_equal(args):
    eq = word_problem_equal(_one_word(args.w1), _one_word(args.w2))
    return {"equal": eq}, str(eq).lower()


def cmd_proptest(args):
    results = run_suite(args.suite, args.max_len, args.seed)
    lines = []
    for r in results:
        status = "ok" if r.ok else "FAILED"
        lines.append(f"{r.suite}: {status} ({r.cases} cases, seed={r.seed}, max_len={r.max_len})")
        for msg in r.failures[:10]:
            lines.append(f"  {msg}")
        if r.checks:
            lines.append(f"  failed checks: {r.checks}")
    payload = [r.to_json() for r in results]
    failed = not all(r.ok for r in results)
    return _single(payload), "\n".join(lines), (2 if failed else 0)


def cmd_bench(args):
    try:
        lengths = [int(x) for x in args.lengths.split(",") if x.strip()]
    except ValueError as exc:
        raise _Usage(f"bad --lengths {args.lengths!r}") from exc
    try:
        report = bench_conjugacy(lengths, args.seed)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    lines = [f"{n:>10}  {t:.6f} s  {p} bytes" for n, t, p in zip(report.lengths, report.times, report.peak_bytes)]
    lines.append("slope: " + ("undefined" if report.slope is None else f"{report.slope:.3f}"))
    return report.to_json(), "\n".join(lines)


def _single(items: list):
    return items[0] if len(items) == 1 else items


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")

    p = argparse.ArgumentParser(prog="braid3", description="Computations in the braid group B_3.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("burau", parents=[common], help="reduced Burau matrix")
    s.add_argument("word")
    s.add_argument("--mod", type=int, help="reduce coefficients mod P")
    s.add_argument("--at", type=int, help="specialize t (only -1 is supported)")
    s.set_defaults(func=cmd_burau)

    s = sub.add_parser("psl2", parents=[common], help="normal form in PSL(2,Z)")
    s.add_argument("word")
    s.add_argument("--matrix", action="store_true")
    s.set_defaults(func=cmd_psl2)

    s = sub.add_parser("pi", parents=[common], help="continued-fraction invariant")
    s.add_argument("word")
    s.set_defaults(func=cmd_pi)

    s = sub.add_parser("moody", parents=[common], help="Moody polynomial of a pure braid")
    s.add_argument("word")
    s.add_argument("--mod", type=int)
    s.add_argument("--cp", action="store_true", help="show the crossing-puncture sequence")
    s.set_defaults(func=cmd_moody)

    for name, func, help_ in (
        ("conjugate", cmd_conjugate, "decide conjugacy"),
        ("dichotomy", cmd_dichotomy, "GL(2) Burau conjugacy dichotomy"),
        ("equal", cmd_equal, "word problem"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("w1")
        s.add_argument("w2")
        if name == "conjugate":
            s.add_argument("--witness", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("proptest", parents=[common], help="seeded property suites")
    s.add_argument("--suite", choices=("burau", "moody", "conjugacy", "all"), default="all")
    s.add_argument("--max-len", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_proptest)

    s = sub.add_parser("bench", parents=[common], help="benchmarks")
    s.add_argument("target", choices=("conjugate",))
    s.add_argument("--lengths", default="1000,10000,100000,1000000")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    as_json = getattr(args, "json", False)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    payload, text, *rest = result
    code = rest[0] if rest else 0
    print(json.dumps(payload) if as_json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
