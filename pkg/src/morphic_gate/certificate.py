"""JSON certificates and a stand-alone checker for them.

All integers are written as decimal strings.  :func:`check_certificate`
re-derives every claimed identity from the document alone: it rebuilds the
substitution from the echoed rules, re-expands the return words, recomputes
ranks with exact fractions, and redoes the eigenvector arithmetic.  It does
not import the engine.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

FORMAT = "morphic-gate-certificate/1"


def _s(x) -> str:
    return str(int(x))


def _vec(v) -> List[str]:
    return [_s(x) for x in v]


def _mat(m) -> List[List[str]]:
    return [_vec(row) for row in m]


def verdict_json(verdict) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": verdict.kind}
    if verdict.kind == "Automatic":
        out.update(
            k=_s(verdict.k),
            minimal_root=_s(verdict.minimal_root),
            s=_s(verdict.s),
            eigenvector=_vec(verdict.eigenvector),
        )
    elif verdict.kind == "NotAutomatic":
        out.update(s=_s(verdict.s), v_s=_vec(verdict.v_s), v_s_times_m=_vec(verdict.v_s_times_m))
    elif verdict.kind == "Periodic":
        out.update(certified_at=_s(verdict.certified_at))
    else:
        out.update(bound=_s(verdict.bound))
    if verdict.kind in ("Automatic", "NotAutomatic"):
        out.update(
            path=verdict.path,
            seed_power=_s(verdict.seed_power),
            assumes_nonperiodic=verdict.assumes_nonperiodic,
            evidence_bound=None if verdict.evidence_bound is None else _s(verdict.evidence_bound),
        )
    return out


def build_certificate(analysis, doc, left_proper=None, presentation=None, spectral=None) -> Dict[str, Any]:
    """Assemble the certificate for an :class:`~morphic_gate.automaticity.Analysis`.

    ``doc`` is the parsed input (echoed in normalized form); the optional
    parts are attached verbatim when given.
    """
    phi = analysis.substitution
    tokens = phi.alphabet
    cert: Dict[str, Any] = {
        "format": FORMAT,
        "input": {
            "letters": list(doc.letters),
            "rules": {t: list(doc.rules[t]) for t in doc.letters},
            "coding": None if doc.coding is None else {t: doc.coding[t] for t in doc.letters},
        },
        "primitivity": {
            "primitive": analysis.primitivity.primitive,
            "witness_power": _s(analysis.primitivity.witness_power),
        },
        "seed": None,
        "periodicity": None,
        "return_system": None,
        "s": None,
        "v_s": None,
        "v_s_times_m": None,
        "eigenvalue": None,
        "verdict": verdict_json(analysis.verdict),
    }
    if analysis.seed is not None:
        seed = analysis.seed
        cert["seed"] = {
            "letter": tokens[seed.letter],
            "power": _s(seed.power),
            "left": None if seed.left is None else tokens[seed.left],
        }
    rep = analysis.periodicity
    if rep is not None:
        cert["periodicity"] = {
            "periodic": rep.periodic,
            "certified": rep.certified,
            "certified_at": None if rep.certified_at is None else _s(rep.certified_at),
            "bound": _s(rep.bound),
            "complexity": _vec(rep.complexity),
        }
    rs = analysis.return_system
    if rs is not None:
        cert["return_system"] = {
            "seed_letter": tokens[rs.seed_letter],
            "words": [[tokens[c] for c in w] for w in rs.words],
            "tau": [_vec(img) for img in rs.tau.images],
            "m_tau": _mat(rs.m_tau),
            "lengths": _vec(rs.lengths),
        }
    red = analysis.reduction
    if red is not None:
        cert["s"] = _s(red.s)
        cert["v_s"] = _vec(red.v_s)
        cert["v_s_times_m"] = _vec(red.v_s_times_m)
        cert["eigenvalue"] = None if red.eigen is None else str(red.eigen)
    if left_proper is not None:
        cert["left_proper"] = left_proper
    if presentation is not None:
        cert["presentation"] = presentation
    if spectral is not None:
        cert["spectral"] = spectral
    return cert


def dumps(cert: Dict[str, Any]) -> str:
    return json.dumps(cert, indent=2, ensure_ascii=False) + "\n"


# -- independent checker ---------------------------------------------------


class CertificateError(AssertionError):
    pass


def _ints(v) -> List[int]:
    return [int(x) for x in v]


def _vm(v, m):
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def _fraction_rank(m) -> int:
    rows = [[Fraction(x) for x in row] for row in m]
    r = 0
    for c in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _mm(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _require(cond, message):
    if not cond:
        raise CertificateError(message)


def check_certificate(cert: Dict[str, Any]) -> str:
    """Raise :class:`CertificateError` unless the certificate is internally valid.

    Returns the verdict kind that was checked.
    """
    _require(cert.get("format") == FORMAT, "unknown certificate format")
    verdict = cert["verdict"]
    kind = verdict["kind"]
    if kind not in ("Automatic", "NotAutomatic"):
        return kind

    inp = cert["input"]
    letters = inp["letters"]
    rules = inp["rules"]
    power = int(cert["seed"]["power"]) if verdict["path"] == "General" else 1

    def expand(word):
        for _ in range(power):
            word = [c for t in word for c in rules[t]]
        return word

    if verdict["path"] == "General":
        rs = cert["return_system"]
        words = rs["words"]
        m = [_ints(row) for row in rs["m_tau"]]
        tau = [_ints(img) for img in rs["tau"]]
        a = rs["seed_letter"]
        _require(_ints(rs["lengths"]) == [len(w) for w in words], "lengths do not match the words")
        for i, w in enumerate(words):
            _require(w[0] == a and w.count(a) == 1, f"return word {i} is malformed")
            _require(
                expand(w) == [c for j in tau[i] for c in words[j]],
                f"tau({i}) does not factorise the image of return word {i}",
            )
            for j in range(len(words)):
                _require(m[j][i] == tau[i].count(j), "m_tau is not the incidence matrix of tau")
        v0 = _ints(rs["lengths"])
    else:
        m = [[sum(1 for t in rules[b] if t == a) for b in letters] for a in letters]
        v0 = [1] * len(letters)

    s = int(verdict["s"])
    d = len(m)
    ranks = []
    p = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(s + 2):
        ranks.append(_fraction_rank(p))
        p = _mm(p, m)
    _require(all(ranks[i] > ranks[i + 1] for i in range(s)), "rank drops before s are missing")
    _require(ranks[s] == ranks[s + 1], "rank has not stabilised at s")

    v = v0
    for _ in range(s):
        v = _vm(v, m)
    vm = _vm(v, m)
    if kind == "Automatic":
        k = int(verdict["k"])
        _require(_ints(verdict["eigenvector"]) == v, "eigenvector is not the pushed-forward length vector")
        _require(vm == [k * x for x in v], "eigenvector identity fails")
        root = int(verdict["minimal_root"])
        _require(root >= 2 and any(root**j == k for j in range(1, k.bit_length() + 1)), "bad minimal root")
    else:
        _require(_ints(verdict["v_s"]) == v, "v_s is not the pushed-forward length vector")
        _require(_ints(verdict["v_s_times_m"]) == vm, "v_s_times_m is wrong")
        parallel = all(vm[i] * v[j] == vm[j] * v[i] for i in range(d) for j in range(d))
        _require(not parallel, "v_s is an eigenvector after all")
    if "left_proper" in cert:
        check_certificate({"format": FORMAT, "input": inp, "verdict": cert["left_proper"]["verdict"]})
    return kind
