"""
Tabular and JSON output.

CSV headers are fixed:
    counts: n,class,model,coefficient,oracle,match
    zeros:  k,re,im,residual
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Optional

import pandas as pd

from weakly_directed_walks.config.settings import Settings

COUNTS_COLUMNS = ["n", "class", "model", "coefficient", "oracle", "match"]
ZEROS_COLUMNS = ["k", "re", "im", "residual"]


def metadata(command: str, timestamp: bool = True, **extra: Any) -> dict[str, Any]:
    """Header block attached to every JSON document."""
    meta: dict[str, Any] = {
        "tool": "weakly-directed-walks",
        "version": Settings.CLIENT_VERSION,
        "command": command,
    }
    if timestamp:
        meta["timestamp"] = datetime.now().isoformat()
    meta.update(extra)
    return meta


def to_json(payload: dict[str, Any], meta: dict[str, Any]) -> str:
    return json.dumps({"metadata": meta, **payload}, indent=2)


def _frame(rows: Iterable[dict[str, Any]], columns: list[str]) -> pd.DataFrame:
    frame = pd.DataFrame(list(rows), columns=columns)
    return frame[columns]


def counts_frame(rows: Iterable[dict[str, Any]]) -> pd.DataFrame:
    return _frame(rows, COUNTS_COLUMNS)


def zeros_frame(rows: Iterable[dict[str, Any]]) -> pd.DataFrame:
    return _frame(rows, ZEROS_COLUMNS)


def to_csv(frame: pd.DataFrame) -> str:
    text: str = frame.to_csv(index=False, lineterminator="\n")
    return text


def write_text(text: str, path: Optional[Path]) -> None:
    """Write UTF-8 text to path (no-op without a path)."""
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
