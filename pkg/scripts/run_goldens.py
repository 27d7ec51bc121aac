"""Analyze every worked example and print a one-line summary each.

    python scripts/run_goldens.py [--certificates DIR]

With ``--certificates`` the JSON certificate of each example is written to
``DIR/<name>.json`` and re-validated by the independent checker.
"""

import argparse
import json
import time
from pathlib import Path

from morphic_gate import analyze, nonsingular_shortcut
from morphic_gate.certificate import build_certificate, check_certificate, dumps
from morphic_gate.goldens import GOLDENS, PERIODIC, load
from morphic_gate.spectral import spectral_scan


def summary(verdict) -> str:
    if verdict.kind == "Automatic":
        return f"Automatic k={verdict.k} root={verdict.minimal_root} s={verdict.s} v={verdict.eigenvector}"
    if verdict.kind == "NotAutomatic":
        return f"NotAutomatic s={verdict.s} v_s={verdict.v_s} v_s*M={verdict.v_s_times_m}"
    return verdict.kind


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--certificates", type=Path)
    args = parser.parse_args()
    if args.certificates:
        args.certificates.mkdir(parents=True, exist_ok=True)

    names = sorted(GOLDENS) + sorted(PERIODIC)
    for name in names:
        doc, phi, coding = load(name)
        t0 = time.perf_counter()
        a = analyze(phi, coding)
        shortcut = nonsingular_shortcut(phi, coding)
        spectral = spectral_scan(phi, 13, 4) if a.verdict.kind != "Periodic" else None
        dt = time.perf_counter() - t0
        extra = ""
        if shortcut is not None:
            extra += f"  shortcut={shortcut.kind}"
        if spectral is not None:
            extra += f"  rational q={spectral.passing() or '-'}"
        print(f"{name:28s} {summary(a.verdict)}{extra}  [{dt * 1000:.0f} ms]")
        if args.certificates:
            cert = build_certificate(a, doc)
            check_certificate(json.loads(dumps(cert)))
            (args.certificates / f"{name}.json").write_text(dumps(cert))


if __name__ == "__main__":
    main()
