"""
Machine tools package: smolagents wrappers around the graph machine.
"""

from .run_machine import RunMachineTool
from .verify_gate import VerifyGateTool
from .oracle_sweep import OracleSweepTool

__all__ = ["RunMachineTool", "VerifyGateTool", "OracleSweepTool"]
