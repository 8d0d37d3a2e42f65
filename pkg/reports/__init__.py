"""
Reports module: jinja2 templates and renderers for machine output.
"""

from .render import render_case_dump, render_gate_report, render_oracle_reports, render_trace

__all__ = [
    "render_case_dump",
    "render_gate_report",
    "render_oracle_reports",
    "render_trace",
]
