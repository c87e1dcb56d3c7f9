"""
Purpose
-------
Structured logging for the toolkit's long-running numerical operations and
for the CLI. One line per event, tied to a run and to the provenance of the
outputs that run writes.

Key behaviors
-------------
- `InfraLogger.emit` writes one entry (JSON by default, or text) to STDERR or
  to a file, dropping entries below the level threshold.
- `initialize_logger` reads `LOG_FORMAT`, `LOG_DEST` and `LOG_LEVEL` from the
  environment, falls back to defaults on invalid values and reports each
  fallback as a WARNING entry.
- `provenance_run_meta` builds the `run_meta` block (tool version, config
  hash, seed) attached to every entry of a run.
- Numeric context values from numpy are serialized as plain numbers; NaN and
  infinities are written as strings so every JSON line stays valid.

Conventions
-----------
- Timestamps are UTC ISO-8601 with a trailing "Z".
- Run identifiers are `<component>--<UTC timestamp>--<pid>`.
- Event names are snake_case (`scan_row`, `window_done`, `criterion_done`);
  fallback warnings keep their upper-case names.
- Logging never raises: unserializable values fall back to `str`.

Downstream usage
----------------
The CLI calls `initialize_logger` once per invocation and passes the logger
into scans, estimates and the verify suite through their optional `logger`
argument; library code never constructs loggers itself.
"""

import datetime as dt
import json
import math
import os
import sys
from typing import Any, TypedDict

import numpy as np

LOG_LEVELS: set[str] = {"DEBUG", "INFO", "WARNING", "ERROR"}
LEVEL_MAPPING: dict[str, int] = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}
LOG_FORMATS: set[str] = {"json", "text"}


class LogEntry(TypedDict):
    """
    Purpose
    -------
    Shape of a single log entry.

    Fields
    ------
    timestamp : str
        UTC ISO-8601 timestamp with a "Z" suffix.
    level : str
        "DEBUG", "INFO", "WARNING" or "ERROR".
    run_id : str
        Identifier of the emitting run.
    component : str
        Emitting component (CLI subcommand or library area).
    event : str
        Machine-readable event name.
    message : str
        Human-readable message.
    run_meta : dict
        Provenance attached at initialization.
    context : dict
        Event payload (small, JSON-serializable).
    """

    timestamp: str
    level: str
    run_id: str
    component: str
    event: str
    message: str
    run_meta: dict
    context: dict


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


class InfraLogger:
    """
    Purpose
    -------
    Level-filtered structured logger bound to one run.

    Key behaviors
    -------------
    - `emit` plus the `debug` / `info` / `warning` / `error` shorthands.
    - `child` returns a logger for a sub-component sharing run id, metadata
      and output settings.

    Parameters
    ----------
    component_name : str
        Component label written into every entry.
    run_id : str
        Identifier correlating the entries of one run.
    run_meta : dict
        Run-scoped metadata (provenance).
    log_level : str, default="INFO"
        Minimum level written.
    log_format : str, default="json"
        "json" or "text".
    log_dest : str, default="stderr"
        "stderr" or a file path (appended to, UTF-8).

    Attributes
    ----------
    component_name, run_id, run_meta : as passed in.
    level : str
        Effective threshold.
    format : str
        Effective format.
    dest : str
        Effective destination.
    """

    def __init__(
        self,
        component_name: str,
        run_id: str,
        run_meta: dict,
        log_level: str = "INFO",
        log_format: str = "json",
        log_dest: str = "stderr",
    ) -> None:
        self.component_name = component_name
        self.run_id = run_id
        self.run_meta = run_meta
        self.level = log_level
        self.format = log_format
        self.dest = log_dest

    def child(self, component_name: str) -> "InfraLogger":
        return InfraLogger(
            component_name=component_name,
            run_id=self.run_id,
            run_meta=self.run_meta,
            log_level=self.level,
            log_format=self.format,
            log_dest=self.dest,
        )

    def enabled(self, level: str) -> bool:
        up_level = level.upper()
        return up_level in LOG_LEVELS and LEVEL_MAPPING[up_level] >= LEVEL_MAPPING[self.level]

    def emit(
        self, event: str, level: str = "INFO", msg: str | None = None, context: dict | None = None
    ) -> None:
        """
        Write one entry if `level` meets the threshold.

        Parameters
        ----------
        event : str
            Event name.
        level : str, default="INFO"
            Case-insensitive level; unknown levels are written at the
            logger's own level.
        msg : str, optional
            Message.
        context : dict, optional
            Payload; numpy scalars and non-finite floats are normalized.
        """

        up_level = level.upper()
        if up_level not in LOG_LEVELS:
            up_level = self.level
        elif not self.enabled(up_level):
            return
        entry: LogEntry = {
            "timestamp": dt.datetime.now(dt.timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": up_level,
            "run_id": self.run_id,
            "component": self.component_name,
            "event": event,
            "message": msg or "",
            "run_meta": self.run_meta,
            "context": _plain(context or {}),
        }
        self.write_entry(self.format_entry(entry))

    def debug(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self.emit(event=event, level="DEBUG", msg=msg, context=context)

    def info(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self.emit(event=event, level="INFO", msg=msg, context=context)

    def warning(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self.emit(event=event, level="WARNING", msg=msg, context=context)

    def error(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self.emit(event=event, level="ERROR", msg=msg, context=context)

    def format_entry(self, entry: LogEntry) -> str:
        """Serialize an entry as one JSON object or one `key=value` text line."""
        if self.format == "json":
            try:
                return json.dumps(entry, ensure_ascii=False, allow_nan=False)
            except (TypeError, ValueError):
                return json.dumps(entry, ensure_ascii=False, default=str)
        context_str = " ".join(f"{k}={v}" for k, v in entry["context"].items())
        return (
            f"{entry['timestamp']} [{entry['level']}] "
            f"{entry['component']} {entry['event']} - {entry['message']} "
            f"{context_str}"
        ).rstrip()

    def write_entry(self, formatted_entry: str) -> None:
        if self.dest == "stderr":
            print(formatted_entry, file=sys.stderr)
        else:
            with open(self.dest, "a", encoding="utf-8") as f:
                f.write(formatted_entry + "\n")


def provenance_run_meta(tool_version: str, config_hash: str, seed: int) -> dict[str, Any]:
    """Return the `run_meta` block shared by a run's log lines and output files."""
    return {"tool_version": tool_version, "config_hash": config_hash, "seed": seed}


def initialize_logger(
    component_name: str,
    level: str | None = None,
    run_id: str | None = None,
    run_meta: dict | None = None,
) -> InfraLogger:
    """
    Configure and return an `InfraLogger`.

    Parameters
    ----------
    component_name : str
        Component label.
    level : str, optional
        Threshold; when omitted `LOG_LEVEL` is read, then "INFO". Unknown
        values fall back to "INFO".
    run_id : str, optional
        Generated from the component name when omitted.
    run_meta : dict, optional
        Usually `provenance_run_meta(...)`.

    Returns
    -------
    InfraLogger
        Logger with environment overrides applied.

    Notes
    -----
    - `LOG_FORMAT` and `LOG_DEST` are honored; invalid values fall back to
      "json" / "stderr" and a WARNING entry names the rejected value.
    """

    fall_backs = {"log_format": False, "log_dest": False}
    log_format, log_dest = extract_env_vars(fall_backs)

    up_level = (level or os.environ.get("LOG_LEVEL", "INFO")).upper()
    if up_level not in LOG_LEVELS:
        up_level = "INFO"

    logger = InfraLogger(
        component_name=component_name,
        run_id=run_id or generate_run_id(component_name),
        run_meta=run_meta or {},
        log_level=up_level,
        log_format=log_format,
        log_dest=log_dest,
    )
    handle_fallbacks(logger, fall_backs)
    return logger


def extract_env_vars(fall_backs: dict[str, bool]) -> tuple[str, str]:
    """
    Read `LOG_FORMAT` and `LOG_DEST`, marking fallbacks in `fall_backs`.

    Notes
    -----
    - A file destination must be openable for appending.
    """

    log_format: str = os.environ.get("LOG_FORMAT", "json")
    log_dest: str = os.environ.get("LOG_DEST", "stderr")

    if log_format.lower() not in LOG_FORMATS:
        fall_backs["log_format"] = True
        log_format = "json"

    if log_dest != "stderr":
        try:
            with open(log_dest, "a", encoding="utf-8"):
                pass
        except OSError:
            fall_backs["log_dest"] = True
            log_dest = "stderr"

    return log_format.lower(), log_dest


def generate_run_id(component_name: str) -> str:
    """Return `<component>--<UTC timestamp>--<pid>`."""
    stamp = dt.datetime.now(dt.timezone.utc).strftime("%Y%m%dT%H%M%SZ")
    return f"{component_name}--{stamp}--{os.getpid()}"


def handle_fallbacks(logger: InfraLogger, fall_backs: dict[str, bool]) -> None:
    """Emit one WARNING per environment variable that fell back to its default."""
    messages = {
        "log_format": ("FALLBACK_LOG_FORMAT", "LOG_FORMAT", "json"),
        "log_dest": ("FALLBACK_LOG_DEST", "LOG_DEST", "stderr"),
    }
    for key, triggered in fall_backs.items():
        if not triggered:
            continue
        event, variable, default = messages[key]
        logger.emit(
            event=event,
            level="WARNING",
            msg=f"Invalid {variable} env var; defaulting to {default}",
            context={"invalid_value": os.environ.get(variable, None)},
        )
