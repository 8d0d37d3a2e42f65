"""
Rendering of traces and reports through the jinja2 templates.
"""

from typing import Iterable, List, Sequence

from jinja2 import Template

from reports.templates import (
    gate_failure_template,
    gate_row_template,
    gate_summary_template,
    oracle_case_template,
    oracle_check_template,
    oracle_violation_template,
    trace_entry_template,
)

_TRACE = Template(trace_entry_template)
_GATE_ROW = Template(gate_row_template)
_GATE_FAILURE = Template(gate_failure_template)
_GATE_SUMMARY = Template(gate_summary_template)
_ORACLE_CHECK = Template(oracle_check_template)
_ORACLE_VIOLATION = Template(oracle_violation_template)
_ORACLE_CASE = Template(oracle_case_template)


def _value_text(value) -> str:
    return getattr(value, "value", value)


def _bits(inputs: Sequence[bool]) -> str:
    return "".join("1" if v else "0" for v in inputs)


def render_trace(trace) -> str:
    """Trace lines, newline-terminated; empty for TraceMode.NONE."""
    return "".join(_TRACE.render(entry=entry) + "\n" for entry in trace.entries)


def render_gate_report(report) -> str:
    lines: List[str] = []
    for row in report.rows:
        lines.append(_GATE_ROW.render(inputs=_bits(row.inputs), expected=_value_text(row.expected), row=row))
        for failure in row.failures:
            lines.append(_GATE_FAILURE.render(failure=failure, actual=_value_text(failure.actual)))
    lines.append(_GATE_SUMMARY.render(kind=report.kind.value, cases=report.cases_checked, passed=report.passed))
    return "\n".join(lines) + "\n"


def render_oracle_reports(reports: Iterable) -> str:
    reports = list(reports)
    lines: List[str] = []
    for report in reports:
        lines.append(_ORACLE_CHECK.render(report=report))
        lines.extend(_ORACLE_VIOLATION.render(violation=v) for v in report.violations)
    lines.append("PASS" if all(r.passed for r in reports) else "FAIL")
    return "\n".join(lines) + "\n"


def render_case_dump(reports: Iterable) -> str:
    return "".join(
        _ORACLE_CASE.render(case=case, status=status) + "\n"
        for report in reports
        for case, status in report.cases
    )
