"""
Gate verification tool for SmolAgent integration
"""

from typing import Optional

from smolagents import Tool

from config.settings import load_settings
from gadgets.gates import GateKind, build_gate, verify_gate
from reports.render import render_gate_report


class VerifyGateTool(Tool):
    """Checks a boolean gadget against its truth table."""

    name = "verify_gate"
    description = "Verifies the embedded NOT, AND, OR or COND gadget on every input row under random don't-care edges."
    inputs = {
        "gate": {
            "type": "string",
            "description": "The gadget to verify. Can be 'not', 'and', 'or' or 'cond'."
        },
        "seeds": {
            "type": "integer",
            "description": "Number of don't-care fills per input row. Optional, defaults to the configured fill count.",
            "nullable": True
        }
    }
    output_type = "object"

    def forward(self, gate: str, seeds: Optional[int] = None) -> dict:
        try:
            kind = GateKind(gate.lower())
        except ValueError:
            return {
                "success": False,
                "error": f"Unknown gate: {gate}",
                "available_gates": [k.value for k in GateKind],
            }
        if seeds is None:
            seeds = load_settings().gadget.seeds
        elif seeds < 1:
            return {"success": False, "error": f"seeds must be at least 1, got {seeds}"}
        report = verify_gate(build_gate(kind), seeds)
        return {
            "success": True,
            "passed": report.passed,
            "cases_checked": report.cases_checked,
            "report": render_gate_report(report),
        }
