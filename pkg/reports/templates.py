"""
Text templates for traces and verification reports.

Each template renders one record; callers join the rendered records with
newlines so the output stays byte-stable.
"""

# One trace entry; the full-mode state block is indented by two spaces
trace_entry_template = (
    "step={{ entry.step }} hash={{ entry.digest }}"
    "{% if entry.state_text %}{% for line in entry.state_text.splitlines() %}\n  {{ line }}{% endfor %}{% endif %}"
)

# One input row of a gate verification
gate_row_template = (
    "row {{ inputs }} expected={{ expected }} fills={{ row.fills }} "
    "{% if row.failures %}failed={{ row.failures | length }}{% else %}ok{% endif %}"
)

# Reproducer block under a failing row
gate_failure_template = (
    "  seed={{ failure.seed }} actual={{ actual }}"
    "{% for line in failure.fixture_text.splitlines() %}\n    {{ line }}{% endfor %}"
)

gate_summary_template = "gate {{ kind }} cases={{ cases }}\n{{ 'PASS' if passed else 'FAIL' }}"

# One oracle check
oracle_check_template = (
    "{{ report.name }} cases={{ report.cases_checked }} violations={{ report.violations | length }}"
    "{% if report.antecedent_cases is not none %} antecedents={{ report.antecedent_cases }}{% endif %}"
    " {{ 'ok' if report.passed else 'FAIL' }}"
)

oracle_violation_template = (
    "  {{ violation.equation }}: {{ violation.op_text }} on"
    "{% for line in violation.state_text.splitlines() %}\n    {{ line }}{% endfor %}"
)

oracle_case_template = "{{ case }}\t{{ status }}"
