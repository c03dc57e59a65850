"""Serialization of campaign reports to json, csv and plain text."""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

from .campaigns import Report
from .errors import ConfigError

FORMATS = ("json", "csv", "text")

_THEOREM1_COLUMNS = ["N", "trial", "kind", "point", "chamber", "q_plus", "q_minus", "q_zero",
                     "g_plus", "g_minus", "g_zero", "pass"]
_ZUBER_COLUMNS = ["N", "level", "h", "vertices", "signature_exact", "signature_numeric", "zuber_counts",
                  "axioms_ok", "spectral_ok", "orbits_ok", "bridge_ok", "q_unreduced_equality", "pass"]
_POINT_COLUMNS = ["N", "point", "chamber", "q_plus", "q_minus", "q_zero", "g_plus", "g_minus", "g_zero", "pass"]


def _chamber_str(ch: dict) -> str:
    if ch["type"] == "interior":
        return "gamma=" + " ".join(map(str, ch["gamma"]))
    return "wall=" + " ".join(map(str, ch["indices"]))


def _triple_str(t) -> str:
    return "({},{},{})".format(*t)


def _row(command: str, case: dict) -> dict:
    if command == "zuber":
        return {
            "N": case["N"],
            "level": case["level"],
            "h": case["h"],
            "vertices": case["vertices"],
            "signature_exact": _triple_str(case["signature_exact"]),
            "signature_numeric": _triple_str(case["signature_numeric"]),
            "zuber_counts": _triple_str(case["zuber_counts"]),
            "axioms_ok": all(case["axioms"].values()),
            "spectral_ok": case["spectral"]["pass"],
            "orbits_ok": all(o["pass"] for o in case["orbits"]),
            "bridge_ok": case["bridge"]["pass"],
            "q_unreduced_equality": case["bridge"]["q_unreduced_equality"],
            "pass": case["pass"],
        }
    row = {
        "N": case["N"],
        "point": " ".join(case["point"]),
        "chamber": _chamber_str(case["chamber"]),
        "pass": case["pass"],
    }
    for side in ("q", "g"):
        for k in ("plus", "minus", "zero"):
            row[f"{side}_{k}"] = case[f"{side}_counts"][k]
    if command == "theorem1":
        row["trial"] = case["trial"]
        row["kind"] = case["kind"]
    return row


def _csv(report: Report) -> str:
    columns = {"zuber": _ZUBER_COLUMNS, "theorem1": _THEOREM1_COLUMNS}.get(report.command, _POINT_COLUMNS)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for case in report.cases:
        writer.writerow(_row(report.command, case))
    return buf.getvalue()


def _text(report: Report, include_timing: bool) -> str:
    totals = report.totals()
    lines = [
        f"{report.command}: {'PASS' if report.passed else 'FAIL'} "
        f"({totals['passed']}/{totals['cases']} cases passed)"
    ]
    if report.command == "zuber":
        for c in report.cases:
            lines.append(
                f"  N={c['N']} level={c['level']} h={c['h']} vertices={c['vertices']}: "
                f"exact {_triple_str(c['signature_exact'])}, numeric {_triple_str(c['signature_numeric'])}, "
                f"zuber {_triple_str(c['zuber_counts'])}, orbits={len(c['orbits'])} "
                f"[{'ok' if c['pass'] else 'FAIL'}]"
            )
    elif report.command == "theorem1":
        per_n: dict[int, list[int]] = {}
        for c in report.cases:
            stats = per_n.setdefault(c["N"], [0, 0, 0])
            stats[0] += 1
            stats[1] += c["kind"] == "boundary"
            stats[2] += c["pass"]
        for n, (total, bnd, ok) in sorted(per_n.items()):
            lines.append(f"  N={n}: {ok}/{total} passed ({bnd} boundary points)")
    else:
        for c in report.cases:
            for key, value in c.items():
                lines.append(f"  {key}: {value}")
    for f in report.failures:
        lines.append(f"  failure: {f}")
    if include_timing and report.elapsed is not None:
        lines.append(f"  wall clock: {report.elapsed:.2f}s")
    return "\n".join(lines) + "\n"


def emit(report: Report, fmt: str = "json", include_timing: bool = False) -> bytes:
    if fmt == "json":
        text = json.dumps(report.to_dict(include_timing), indent=2, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        text = _csv(report)
    elif fmt == "text":
        text = _text(report, include_timing)
    else:
        raise ConfigError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    return text.encode("utf-8")


def write(data: bytes, path: Path | None) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc
