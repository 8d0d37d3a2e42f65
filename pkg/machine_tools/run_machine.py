"""
Run machine tool for SmolAgent integration
"""

from typing import Optional

from smolagents import Tool

from config.settings import load_settings
from graph_core.codec import decode_state, encode_text
from graph_core.errors import GraphError
from machine.runner import Halted, RunLimits, StepLimit, outcome_line, run
from op_engine.program import parse_program


class RunMachineTool(Tool):
    """Iterates a program on a graph state until it halts, cycles or hits the step limit."""

    name = "run_machine"
    description = """Runs the blind graph-rewriting machine. Takes a graph in .pg text form and a program
    in .pop text form (one primitive op like '0[011 := 10]' per line) and applies the program repeatedly
    until the state stops changing."""

    inputs = {
        "graph": {
            "type": "string",
            "description": "Graph text: a 'nodes N' line followed by N lines 'i succ0 succ1'."
        },
        "program": {
            "type": "string",
            "description": "Program text: one op per line, applied top to bottom."
        },
        "max_steps": {
            "type": "integer",
            "description": "Maximum number of program applications. Optional.",
            "nullable": True
        }
    }
    output_type = "object"

    def forward(self, graph: str, program: str, max_steps: Optional[int] = None) -> dict:
        """Execute the run and report the outcome line and final state."""
        try:
            state = decode_state(graph)
            composition = parse_program(program)
            defaults = load_settings().run
            limits = RunLimits(
                max_steps=defaults.max_steps if max_steps is None else max_steps,
                max_tracked_states=defaults.max_tracked_states,
            )
            outcome, _ = run(state, composition, limits)
        except GraphError as e:
            return {"success": False, "error": str(e)}

        result = {"success": True, "outcome": outcome_line(outcome)}
        if isinstance(outcome, Halted):
            result["final_state"] = encode_text(outcome.final)
        elif isinstance(outcome, StepLimit):
            result["final_state"] = encode_text(outcome.last)
        return result
