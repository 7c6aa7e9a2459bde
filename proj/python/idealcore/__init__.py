"""Exact-arithmetic computation of cores of ideals.

The heavy lifting happens in the C++ extension; this package builds the
job text the engine consumes and decodes its JSON reports.
"""

import json as _json

from ._core import (  # noqa: F401
    EngineError,
    InconclusiveWindow,
    JobParseError,
    UnsupportedInputClass,
    print_job,
    run_job,
)

__all__ = [
    "analyze",
    "core",
    "hilbert",
    "reduction_number",
    "fiber_ring",
    "check",
    "run",
    "job_text",
    "print_job",
    "run_job",
    "JobParseError",
    "UnsupportedInputClass",
    "InconclusiveWindow",
    "EngineError",
]


def job_text(vars, relations, *, field="Q", ideal=None, reduction=None,
             weights=None, n_max=0, sample="", seed=1, primes=None):
    """Assemble the key = value job text the engine parses."""
    lines = [f"field = {field}"]
    lines.append("vars = [" + ", ".join(vars) + "]")
    lines.append("relations = [" + ", ".join(relations) + "]")
    if ideal:
        lines.append("ideal = [" + ", ".join(ideal) + "]")
    if reduction:
        lines.append("reduction = [" + ", ".join(reduction) + "]")
    if weights:
        lines.append("weights = [" + ", ".join(str(w) for w in weights) + "]")
    if n_max:
        lines.append(f"n_max = {n_max}")
    if sample:
        lines.append(f"sample = {sample}")
    if seed != 1:
        lines.append(f"seed = {seed}")
    if primes:
        lines.append("primes = [" + ", ".join(str(p) for p in primes) + "]")
    return "\n".join(lines) + "\n"


def run(text, command="", method=""):
    """Run a job text; returns the decoded JSON report."""
    out = run_job(text, command, method)
    report = _json.loads(out["json"])
    report["exit_code"] = out["exit_code"]
    report["report"] = out["text"]
    return report


def core(vars, relations, *, method="theorem16", **kw):
    """Generators of the core, plus diagnostics (r, hilbert, strata)."""
    return run(job_text(vars, relations, **kw), "core", method)


def analyze(vars, relations, **kw):
    """Stabilization degree, Hilbert data and the final minor ideal."""
    return run(job_text(vars, relations, **kw), "analyze")


def hilbert(vars, relations, **kw):
    """Hilbert function values over the inspection window."""
    report = run(job_text(vars, relations, **kw), "hilbert")
    return report["diagnostics"]["hilbert"]


def reduction_number(vars, relations, **kw):
    """Reduction number of the declared data (see the CLI for variants)."""
    report = run(job_text(vars, relations, **kw), "reduction-number")
    return report["diagnostics"]["r"]


def fiber_ring(vars, relations, *, ideal, **kw):
    """Presentation of the special fiber of the declared ideal."""
    return run(job_text(vars, relations, ideal=ideal, **kw), "fiber-ring")


def check(vars, relations, **kw):
    """Cross-validation battery; exit_code 1 signals a failed check."""
    return run(job_text(vars, relations, **kw), "check")
