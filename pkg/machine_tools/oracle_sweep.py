"""
Oracle sweep tool for SmolAgent integration
"""

from typing import Optional

from smolagents import Tool

from config.settings import load_settings
from graph_core.errors import GraphError
from oracle.sweeps import SweepBounds, run_all_checks


class OracleSweepTool(Tool):
    """Runs the exhaustive semantics checks for a small node count."""

    name = "oracle_sweep"
    description = """Checks the primitive op semantics exhaustively on every graph with the given number of nodes
    (1 to 3): the three defining equations, the fixed-point criterion and fixed-point construction."""
    inputs = {
        "nodes": {
            "type": "integer",
            "description": "Node count of the enumerated graphs, 1 to 3."
        },
        "max_path": {
            "type": "integer",
            "description": "Longest written label string for op targets and sources. Optional, defaults to the configured path bound.",
            "nullable": True
        }
    }
    output_type = "object"

    def forward(self, nodes: int, max_path: Optional[int] = None) -> dict:
        defaults = load_settings().oracle
        path = defaults.max_path if max_path is None else max_path
        try:
            bounds = SweepBounds(nodes, max_target_len=path, max_source_len=path)
        except GraphError as e:
            return {"success": False, "error": str(e)}
        reports = run_all_checks(bounds, defaults.programs, defaults.seed)
        return {
            "success": True,
            "passed": all(r.passed for r in reports),
            "checks": {
                r.name: {"cases": r.cases_checked, "violations": len(r.violations), "passed": r.passed}
                for r in reports
            },
        }
