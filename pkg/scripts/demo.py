#!/usr/bin/env python3

"""
Blind machine demonstration: the conditional embedding and the derived gates
"""

import sys
import os
# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from graph_core.codec import digest_hex, encode_text
from gadgets.cells import read_bool
from gadgets.cond import build_cond_fixture, cond_program, read_cond_result
from gadgets.gates import GateKind, build_gate, verify_gate
from machine.runner import outcome_line, run
from op_engine.program import print_program


def show_cond(value: bool):
    """Run the conditional on one fixture and show where the readout lands"""
    state, layout = build_cond_fixture(value)
    print(f"\n🧩 Fixture with b = {value}  ({digest_hex(state)})")
    print(f"   Cell at b reads: {read_bool(state, layout.b).value}")
    for line in encode_text(state).splitlines():
        print(f"   {line}")

    outcome, _ = run(state, cond_program())
    print(f"🏁 {outcome_line(outcome)}")

    result = read_cond_result(outcome.final, layout)
    branch = "m" if result == layout.m else "n"
    print(f"📍 Readout reaches node {result} ({branch})")


def show_gates():
    """Verify every gate gadget on a handful of don't-care fills"""
    print("\n🔌 Gate verification")
    for kind in GateKind:
        report = verify_gate(build_gate(kind), seeds=10)
        status = "✅" if report.passed else "❌"
        print(f"   {status} {kind.value:<5} {report.cases_checked} cases")


def main():
    """Walk through the conditional embedding and the gates built on it"""
    print("🔁 Blind Graph Machine Demonstration")
    print("=" * 50)

    print("📜 Conditional program:")
    for line in print_program(cond_program()).splitlines():
        print(f"   {line}")

    show_cond(True)
    show_cond(False)
    show_gates()

    print("\n🎉 Demo completed!")


if __name__ == "__main__":
    main()
