"""Converts results to report dictionaries and writes JSON/CSV report files."""

import csv
import io
import json
import threading
from pathlib import Path
from typing import Any, Iterable, Sequence

from .. import __version__
from ..automorphisms.atoms import Abels3Phi, Abels3PhiV, DiagConj, Flip, Inner, RingInduced, SuperdiagonalMap
from ..automorphisms.automorphism import Automorphism
from ..automorphisms.quotient import SuperdiagonalForm
from ..groups.element import GroupElement
from ..groups.quotients import QuotientElement
from ..rings.element import RingElement

_write_lock = threading.Lock()


def serialize_group_element(g: GroupElement) -> dict[str, Any]:
    """{"diag": [...], "upper": {"i,j": ...}} with upper the unipotent factor."""
    return {
        "diag": [str(u) for u in g.diagonal],
        "upper": {f"{i},{j}": str(r) for (i, j), r in g.upper},
    }


def serialize_element(x: Any) -> Any:
    if isinstance(x, QuotientElement):
        return {"quotient": x.quotient.label, **serialize_group_element(x.rep)}
    if isinstance(x, GroupElement):
        return serialize_group_element(x)
    if isinstance(x, RingElement):
        return str(x)
    return x


def serialize_atom(atom: Any) -> dict[str, Any]:
    if isinstance(atom, Inner):
        return {"atom": "inner", "g": serialize_group_element(atom.g)}
    if isinstance(atom, DiagConj):
        return {"atom": "diag_conj", "d": [str(u) for u in atom.d]}
    if isinstance(atom, Flip):
        return {"atom": "flip"}
    if isinstance(atom, RingInduced):
        return {"atom": "ring", "desc": atom.desc.to_json()}
    if isinstance(atom, Abels3Phi):
        return {"atom": "abels3_phi"}
    if isinstance(atom, Abels3PhiV):
        return {"atom": "abels3_phi_v", "v": str(atom.v)}
    if isinstance(atom, SuperdiagonalMap):
        return {"atom": "superdiagonal", "sigma": list(atom.sigma)}
    raise TypeError(f"cannot serialize atom {atom!r}")


def serialize_automorphism(phi: Automorphism) -> dict[str, Any]:
    return {
        "label": phi.label,
        "quotient": phi.quotient.label,
        "atoms": [serialize_atom(atom) for atom in phi.atoms],
    }


def serialize_superdiagonal_form(form: SuperdiagonalForm | None) -> dict[str, Any] | None:
    if form is None:
        return None
    return {
        "sigma": list(form.sigma),
        "tables": [[[str(r), str(s)] for r, s in table] for table in form.tables],
    }


def build_report(command: str, config: dict[str, Any], seed: int, anchors: Sequence[str], body: dict[str, Any]) -> dict[str, Any]:
    """Assemble the full report; contains nothing time-dependent."""
    return {
        "tool": "twistmat",
        "version": __version__,
        "command": command,
        "seed": seed,
        "config": config,
        "anchors": list(anchors),
        "result": body,
    }


def to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_csv(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _atomic_write(path: Path, text: str) -> None:
    temp_path = path.with_suffix(path.suffix + ".tmp")
    try:
        with open(temp_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        temp_path.replace(path)
    except Exception:
        if temp_path.exists():
            temp_path.unlink()
        raise


def write_report(
    out_dir: Path,
    stem: str,
    report: dict[str, Any],
    rows: Sequence[dict[str, Any]],
    columns: Sequence[str],
    fmt: str = "both",
) -> list[Path]:
    """Write <stem>.json and/or <stem>.csv under out_dir; returns the written paths."""
    if fmt not in ("json", "csv", "both"):
        raise ValueError("format must be 'json', 'csv', or 'both'")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    with _write_lock:
        if fmt in ("json", "both"):
            path = out_dir / f"{stem}.json"
            _atomic_write(path, to_json(report))
            written.append(path)
        if fmt in ("csv", "both"):
            path = out_dir / f"{stem}.csv"
            _atomic_write(path, to_csv(rows, columns))
            written.append(path)
    return written


def write_timing(out_dir: Path, stem: str, seconds: float, display: str) -> Path:
    """Wall time goes to a sidecar so that the report itself stays reproducible."""
    path = Path(out_dir) / f"{stem}.timing.json"
    with _write_lock:
        _atomic_write(path, to_json({"wall_seconds": round(seconds, 3), "wall_time": display}))
    return path
