"""
Machine-readable reports for ReesType commands.

A report echoes the command and its inputs, fingerprints the inputs,
and carries the command-specific results plus optional timings. With
timings switched off the serialization is byte-identical across runs.
"""

import hashlib
import json
from typing import Any, Dict, Optional

from src.utilis.logger import logger

VERSION = "0.3.0"


def _canonical(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), default=str)


def inputs_digest(inputs: Dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON of `inputs`."""
    return hashlib.sha256(_canonical(inputs).encode("utf-8")).hexdigest()


def build_report(
    command: str,
    inputs: Dict[str, Any],
    results: Dict[str, Any],
    elapsed: Optional[float] = None,
) -> Dict[str, Any]:
    """Assemble the report dict for one command run.

    Args:
        command: Subcommand name.
        inputs: Echo of every input that determines the computation.
        results: Command-specific output.
        elapsed: Wall time in seconds, or None to omit timings.

    Returns:
        Report dict with keys command, inputs, inputs_digest, results,
        timings and version.
    """
    report: Dict[str, Any] = {
        "command": command,
        "inputs": inputs,
        "inputs_digest": inputs_digest(inputs),
        "results": results,
        "timings": {"elapsed_seconds": round(elapsed, 4)} if elapsed is not None else {},
        "version": VERSION,
    }
    logger.info("Report built for %s (digest %s)", command, report["inputs_digest"][:12])
    return report


def error_report(command: str, inputs: Dict[str, Any], error: Exception, exit_code: int) -> Dict[str, Any]:
    """Report for a failed run; results hold the error payload."""
    return build_report(
        command,
        inputs,
        {"error": str(error), "error_type": type(error).__name__, "exit_code": exit_code},
    )


def dump_report(report: Dict[str, Any]) -> str:
    """Serialize with sorted keys and a two-space indent."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, default=str)
