"""``morphic-gate`` command line.

Exit codes: 0 analysis completed (whatever the verdict), 1 the requested
construction does not exist for this input (e.g. ``dekking`` on a
non-automatic sequence), 2 input error (unparsable file, unusable seed or
argument), 3 not primitive, 4 periodicity
unresolved under ``--strict``, 5 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import linalg
from .automaticity import analyze, analyze_left_proper, nonsingular_shortcut
from .certificate import verdict_json, build_certificate, dumps
from .dekking import build_presentation, evaluate, merge_letters, to_dfao
from .errors import ContractViolation, EigenPreconditionError, MorphicError, NotPrimitiveError, OrbitCapExceeded
from .inputfmt import ParseError, parse_input
from .spectral import DEFAULT_EXPONENT_BOUND, DEFAULT_PRIME_BOUND, spectral_scan
from .words import (
    DEFAULT_PERIODICITY_BOUND,
    expand_prefix,
    factor_complexity,
    find_fixed_point_seed,
    incidence_matrix,
    power,
    require_primitive,
)

ENV_BOUND = "MORPHIC_GATE_PERIODICITY_BOUND"

EXIT_OK = 0
EXIT_UNAVAILABLE = 1
EXIT_PARSE = 2
EXIT_NOT_PRIMITIVE = 3
EXIT_UNRESOLVED = 4
EXIT_CONTRACT = 5


class Unavailable(Exception):
    pass


def _default_bound() -> int:
    raw = os.environ.get(ENV_BOUND)
    return int(raw) if raw else DEFAULT_PERIODICITY_BOUND


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="substitution file ('-' for stdin)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", help="seed letter of the fixed point")
    common.add_argument("--power", type=int, help="force the seed power e")
    common.add_argument("--periodicity-bound", type=int, default=None, metavar="N")
    common.add_argument("--assume-nonperiodic", action="store_true")
    common.add_argument("--strict", action="store_true", help="no verdict without certified aperiodicity")

    parser = argparse.ArgumentParser(prog="morphic-gate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="full decision with certificate")
    p.add_argument("--spectral", action="store_true", help="attach the rational spectrum scan")
    p.add_argument("--dfao", metavar="PATH", help="also write the DFAO table when automatic")
    sub.add_parser("return-words", parents=[common], help="return words and return substitution")
    p = sub.add_parser("dekking", parents=[common], help="constant-length presentation and DFAO")
    p.add_argument("--basis", choices=["returns", "letters"], default="returns")
    p.add_argument("--no-merge", action="store_true")
    p.add_argument("--output", metavar="PATH", help="write the DFAO table here")
    p = sub.add_parser("eval", parents=[common], help="n-th letter via the DFAO")
    p.add_argument("--index", type=int, required=True)
    p = sub.add_parser("expand", parents=[common], help="prefix of the coded fixed point")
    p.add_argument("--length", type=int, required=True)
    p = sub.add_parser("spectral", parents=[common], help="rational dynamical eigenvalues")
    p.add_argument("--prime-bound", type=int, default=DEFAULT_PRIME_BOUND)
    p.add_argument("--exponent-bound", type=int, default=DEFAULT_EXPONENT_BOUND)
    p = sub.add_parser("complexity", parents=[common], help="factor complexity p(1..n)")
    p.add_argument("--max", type=int, required=True, dest="n_max")
    return parser


class Session:
    """Parsed input plus the options shared by every subcommand."""

    def __init__(self, args):
        self.args = args
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(str(exc)) from None
        self.doc = parse_input(text)
        self.phi = self.doc.substitution()
        self.coding = self.doc.coding_morphism(self.phi)
        self.bound = args.periodicity_bound if args.periodicity_bound is not None else _default_bound()
        seed = args.seed if args.seed is not None else self.doc.seed
        if seed is not None and seed not in self.phi.alphabet:
            raise ParseError(f"seed {seed!r} is not a declared letter")
        self.seed_hint = None if seed is None else self.phi.alphabet.index(seed)
        self.left = None if self.doc.left is None else self.phi.alphabet.index(self.doc.left)

    def analysis(self, strict=None):
        return analyze(
            self.phi,
            self.coding,
            self.seed_hint,
            self.bound,
            strict=self.args.strict if strict is None else strict,
            assume_nonperiodic=self.args.assume_nonperiodic,
            power=self.args.power,
            left=self.left,
        )

    def token(self, b: int) -> str:
        if self.coding is not None:
            return str(self.coding.target[self.coding.images[b][0]])
        return str(self.phi.alphabet[b])

    def presentation(self, basis="returns", merge=True):
        a = self.analysis(strict=False)
        if a.verdict.kind != "Automatic":
            raise Unavailable(f"no constant-length presentation: verdict is {a.verdict.kind}")
        if basis == "returns":
            p = build_presentation(a.return_system.base, a.return_system, a.verdict.s, a.verdict.k)
        else:
            base = power(self.phi, a.seed.power)
            m = incidence_matrix(base)
            s = linalg.nilpotency_index(m)
            try:
                p = build_presentation(base, None, s, seed=a.seed.letter)
            except EigenPreconditionError as exc:
                raise Unavailable(f"letter basis does not work here: {exc}") from None
        return merge_letters(p) if merge else p


def _fmt_vec(v) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def _presentation_json(p) -> dict:
    return {
        "k": str(p.k),
        "letters": [[str(w), str(i)] for w, i in p.letters],
        "phi_bar": [[str(c) for c in img] for img in p.phi_bar.images],
        "pi": [str(p.pi.target[b]) for (b,) in p.pi.images],
        "seed": str(p.seed),
    }


def _describe_verdict(v) -> str:
    if v.kind == "Automatic":
        text = f"Automatic, k={v.k} (minimal root {v.minimal_root}), s={v.s}, eigenvector {_fmt_vec(v.eigenvector)}"
    elif v.kind == "NotAutomatic":
        text = f"NotAutomatic, s={v.s}: v_s={_fmt_vec(v.v_s)}, v_s*M={_fmt_vec(v.v_s_times_m)} is not a multiple of v_s"
    elif v.kind == "Periodic":
        return f"Periodic (certified: p({v.certified_at}) <= {v.certified_at})"
    else:
        return f"UnresolvedPeriodicity (no certificate either way up to n={v.bound})"
    text += f" [{v.path} path"
    if v.seed_power != 1:
        text += f", for phi^{v.seed_power}"
    if v.assumes_nonperiodic:
        text += f"; assumes nonperiodic, evidence up to n={v.evidence_bound}"
    return text + "]"


def cmd_analyze(s: Session, out) -> int:
    a = s.analysis()
    phi = s.phi
    left_proper = None
    if phi.left_proper and a.verdict.kind in ("Automatic", "NotAutomatic"):
        lp = analyze_left_proper(phi, s.coding, s.bound, assume_nonperiodic=True)
        shortcut = nonsingular_shortcut(phi, s.coding, s.bound)
        left_proper = {
            "verdict": verdict_json(lp.verdict),
            "determinant": str(linalg.determinant(lp.matrix)),
            "nonsingular_shortcut": None if shortcut is None else verdict_json(shortcut),
        }
    spectral = None
    if s.args.spectral:
        spectral = _spectral_json(spectral_scan(phi))
    presentation = None
    if s.args.dfao and a.verdict.kind == "Automatic":
        p = s.presentation()
        with open(s.args.dfao, "w", encoding="utf-8") as fh:
            fh.write(to_dfao(p, s.coding).to_text())
        presentation = {"dfao": s.args.dfao, "states": str(len(p)), "k": str(p.k)}
    cert = build_certificate(a, s.doc, left_proper, presentation, spectral)
    if s.args.json:
        out.write(dumps(cert))
    else:
        _print_analysis(a, s, left_proper, out)
    if a.verdict.kind == "UnresolvedPeriodicity":
        return EXIT_UNRESOLVED
    return EXIT_OK


def _print_analysis(a, s: Session, left_proper, out) -> None:
    phi = s.phi
    w = out.write
    w(f"substitution: {phi.render()}\n")
    if s.coding is not None:
        w(f"coding: {s.coding.render()}\n")
    w(f"primitive: yes (all entries of M^{a.primitivity.witness_power} positive)\n")
    if a.seed is not None:
        w(f"seed: {phi.alphabet[a.seed.letter]} (power {a.seed.power})")
        w(f", left {phi.alphabet[a.seed.left]}\n" if a.seed.left is not None else "\n")
    rep = a.periodicity
    if rep is not None:
        if rep.periodic:
            w(f"periodicity: periodic, p({rep.certified_at}) = {rep.complexity[-1]}\n")
        else:
            w(f"periodicity: p(n) > n for all n <= {rep.bound} (evidence only)\n")
    rs = a.return_system
    if rs is not None:
        a_tok = phi.alphabet[rs.seed_letter]
        w(f"return words to {a_tok}: " + ", ".join(f"{i}={t}" for i, t in enumerate(rs.render_words())) + "\n")
        w("tau: " + ", ".join(f"{i}->{' '.join(map(str, img))}" for i, img in enumerate(rs.tau.images)) + "\n")
        w(f"M_tau: {[list(r) for r in rs.m_tau]}\n")
        red = a.reduction
        w(f"s = {red.s}\nv_s = {_fmt_vec(red.v_s)}\nv_s * M_tau = {_fmt_vec(red.v_s_times_m)}\n")
    w(f"verdict: {_describe_verdict(a.verdict)}\n")
    if left_proper is not None:
        w(f"left-proper check: {left_proper['verdict']['kind']} (det M = {left_proper['determinant']})\n")


def cmd_return_words(s: Session, out) -> int:
    a = s.analysis(strict=False)
    rs = a.return_system
    if rs is None:
        raise Unavailable(f"no return system: verdict is {a.verdict.kind}")
    cert = build_certificate(a, s.doc)
    if s.args.json:
        out.write(json.dumps(cert["return_system"], indent=2) + "\n")
    else:
        for i, t in enumerate(rs.render_words()):
            out.write(f"{i} {t} -> {' '.join(map(str, rs.tau.images[i]))}\n")
        out.write(f"M_tau: {[list(r) for r in rs.m_tau]}\nlengths: {_fmt_vec(rs.lengths)}\n")
    return EXIT_OK


def cmd_dekking(s: Session, out) -> int:
    p = s.presentation(s.args.basis, not s.args.no_merge)
    dfao = to_dfao(p, s.coding)
    if s.args.output:
        with open(s.args.output, "w", encoding="utf-8") as fh:
            fh.write(dfao.to_text())
    if s.args.json:
        out.write(json.dumps(_presentation_json(p), indent=2) + "\n")
    else:
        out.write(f"k = {p.k}, {len(p)} letters, seed {p.letters[p.seed]}\n")
        for b, img in enumerate(p.phi_bar.images):
            out.write(f"{p.letters[b]} -> {' '.join(str(p.letters[c]) for c in img)}  [{p.pi.target[p.pi.images[b][0]]}]\n")
        if not s.args.output:
            out.write(dfao.to_text())
    return EXIT_OK


def cmd_eval(s: Session, out) -> int:
    dfao = to_dfao(s.presentation(), s.coding)
    value = evaluate(dfao, s.args.index)
    out.write(json.dumps({"index": str(s.args.index), "value": value}) + "\n" if s.args.json else value + "\n")
    return EXIT_OK


def _seed(s: Session):
    return find_fixed_point_seed(s.phi, s.seed_hint, power=s.args.power)


def cmd_expand(s: Session, out) -> int:
    prefix = [s.token(b) for b in expand_prefix(s.phi, _seed(s), s.args.length)]
    if s.args.json:
        out.write(json.dumps(prefix) + "\n")
    else:
        sep = "" if all(len(t) == 1 for t in prefix) else " "
        out.write(sep.join(prefix) + "\n")
    return EXIT_OK


def _spectral_json(report) -> dict:
    def entry(t):
        return {
            "q": str(t.q),
            "is_eigenvalue": t.is_eigenvalue,
            "witness": None if t.witness is None else str(t.witness),
            "preperiod": None if t.preperiod is None else str(t.preperiod),
            "period": None if t.period is None else str(t.period),
            "failed_divisor": None if t.failed_divisor is None else str(t.failed_divisor),
            "cap_exceeded": t.cap_exceeded,
        }

    return {
        "scope": "rational eigenvalues only",
        "basis": report.basis,
        "prime_bound": str(report.prime_bound),
        "exponent_bound": str(report.exponent_bound),
        "tested": [entry(t) for t in report.tested],
        "maximal_prime_power": {str(p): str(q) for p, q in sorted(report.maximal_prime_power.items())},
    }


def cmd_spectral(s: Session, out) -> int:
    require_primitive(s.phi)
    report = spectral_scan(s.phi, s.args.prime_bound, s.args.exponent_bound)
    if s.args.json:
        out.write(json.dumps(_spectral_json(report), indent=2) + "\n")
    else:
        out.write(f"rational eigenvalues exp(2 pi i p/q), lengths over {report.basis}\n")
        out.write(f"passing q: {report.passing()}\n")
        for p, q in sorted(report.maximal_prime_power.items()):
            out.write(f"  largest power of {p} tested positive: {q}\n")
        undecided = [t.q for t in report.tested if t.cap_exceeded]
        if undecided:
            out.write(f"undecided (orbit cap exceeded): {undecided}\n")
    return EXIT_OK


def cmd_complexity(s: Session, out) -> int:
    require_primitive(s.phi)
    curve = factor_complexity(s.phi, _seed(s), s.coding, s.args.n_max)
    if s.args.json:
        out.write(json.dumps([str(x) for x in curve]) + "\n")
    else:
        out.write(" ".join(map(str, curve)) + "\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "return-words": cmd_return_words,
    "dekking": cmd_dekking,
    "eval": cmd_eval,
    "expand": cmd_expand,
    "spectral": cmd_spectral,
    "complexity": cmd_complexity,
}


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        session = Session(args)
        return COMMANDS[args.command](session, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except NotPrimitiveError as exc:
        err.write(f"not primitive: {exc}\n")
        return EXIT_NOT_PRIMITIVE
    except Unavailable as exc:
        err.write(f"{exc}\n")
        return EXIT_UNAVAILABLE
    except (ContractViolation, OrbitCapExceeded) as exc:
        err.write(f"internal contract violation: {exc}\n")
        return EXIT_CONTRACT
    except ValueError as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_PARSE
    except MorphicError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_UNAVAILABLE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
