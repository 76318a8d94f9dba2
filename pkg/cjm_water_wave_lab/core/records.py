"""Run records and their CSV / JSON persistence."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/records.ipynb.

# %% auto #0
__all__ = ['SCHEMA_VERSION', 'format_number', 'write_rows_csv', 'RunRecord', 'write_json', 'run_directory']

# %% ../../nbs/core/records.ipynb #2c7b1e94
import csv
import json
import math
from dataclasses import dataclass, field, fields, is_dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

# %% ../../nbs/core/records.ipynb #98f3a0d5
SCHEMA_VERSION = "1.0"

def format_number(
    value: Any  # Cell value
) -> str:  # Text with 17 significant digits for floats
    """Render a CSV cell; floats keep full double precision."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format(float(value), '.17g')
    if value is None:
        return ""
    return str(value)

def write_rows_csv(
    path: Union[str, Path],  # Destination file
    rows: Sequence[Any],  # Dataclass instances of one type
    columns: Optional[Sequence[str]] = None  # Header; defaults to the dataclass field names
) -> Path:  # Written path
    """Write dataclass rows as RFC-4180 CSV with a header naming the fields."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if columns is None:
        if not rows:
            raise ValueError("cannot infer CSV columns from zero rows")
        columns = [f.name for f in fields(rows[0])]
    with path.open('w', newline='') as fh:
        writer = csv.writer(fh, lineterminator='\r\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_number(getattr(row, c)) for c in columns])
    return path

# %% ../../nbs/core/records.ipynb #e15d6ab2
def _jsonable(
    value: Any  # Value to convert
) -> Any:  # JSON-compatible value; non-finite floats become strings
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: _jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    return value

def write_json(
    path: Union[str, Path],  # Destination file
    payload: Any  # Mapping or dataclass
) -> Path:  # Written path
    """Write a JSON document with sorted keys."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n")
    return path

# %% ../../nbs/core/records.ipynb #7ad40c3e
@dataclass
class RunRecord:
    """Diagnostics time series of one run plus its provenance."""
    config: Dict[str, Any] = field(default_factory=dict)  # Config echo
    seed: Any = None  # Seed or (master seed, run index)
    rows: List[Any] = field(default_factory=list)  # DiagnosticsRecord rows
    columns: List[str] = field(default_factory=list)  # CSV header; inferred from the rows when empty
    halt_reason: Optional[str] = None
    halt_time: Optional[float] = None
    lifespan: Optional[float] = None  # First time E_s >= threshold E_s(0), capped at the horizon
    lifespan_blowup: Optional[float] = None  # First time E_s >= blow-up factor E_s(0)
    censored: bool = False  # True when the lifespan threshold was never crossed
    scheme: Dict[str, Any] = field(default_factory=dict)
    wall_clock: Dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def note_growth(
        self,
        time: float,  # Elapsed time of the snapshot
        ratio: float,  # E_s / E_s(0)
        threshold: float,  # Lifespan proxy threshold
        blowup_factor: float  # Blow-up ceiling
    ) -> None:
        """Record the first crossings of the lifespan threshold and the blow-up ceiling."""
        if self.lifespan is None and ratio >= threshold:
            self.lifespan = time
        if self.lifespan_blowup is None and ratio >= blowup_factor:
            self.lifespan_blowup = time

    def write_csv(
        self,
        path: Union[str, Path]  # Destination file
    ) -> Path:  # Written path
        """Diagnostics rows as CSV."""
        return write_rows_csv(path, self.rows, self.columns or None)

    def summary(
        self
    ) -> Dict[str, Any]:  # Everything except the rows
        """Summary block for the JSON report."""
        return {
            "schema_version": self.schema_version,
            "seed": self.seed,
            "halt_reason": self.halt_reason,
            "halt_time": self.halt_time,
            "lifespan": self.lifespan,
            "lifespan_blowup": self.lifespan_blowup,
            "censored": self.censored,
            "snapshots": len(self.rows),
            "scheme": self.scheme,
            "wall_clock": self.wall_clock,
        }

# %% ../../nbs/core/records.ipynb #0f6c91b8
def run_directory(
    out: Union[str, Path],  # Output root
    experiment: str,  # Experiment kind
    stamp: Optional[str] = None  # Timestamp folder name (default: now, UTC)
) -> Path:  # out/<experiment>/<timestamp>, created with a runs/ subfolder
    """Create the output folder of one invocation."""
    stamp = stamp or datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%fZ")
    path = Path(out) / experiment / stamp
    (path / "runs").mkdir(parents=True, exist_ok=True)
    return path
