from machine_tools import OracleSweepTool, RunMachineTool, VerifyGateTool

COND_GRAPH = "nodes 7\n0 1 2\n1 3 4\n2 5 6\n3 3 3\n4 4 4\n5 5 6\n6 6 6\n"
COND_PROGRAM = "0[011 := 10]\n0[001 := 00]\n"


def test_run_machine_tool_halts():
    result = RunMachineTool().forward(graph=COND_GRAPH, program=COND_PROGRAM)
    assert result["success"] is True
    assert result["outcome"] == "halted steps=1"
    assert result["final_state"].splitlines()[-1] == "6 4 6"


def test_run_machine_tool_cycle_and_limit():
    graph = "nodes 3\n0 1 0\n1 1 2\n2 2 1\n"
    assert RunMachineTool().forward(graph=graph, program="0[0 := 10]")["outcome"] == "cycled prefix=0 period=2"
    limited = RunMachineTool().forward(graph=graph, program="0[0 := 10]", max_steps=1)
    assert limited["outcome"] == "step-limit 1"
    assert limited["final_state"] == "nodes 3\n0 2 0\n1 1 2\n2 2 1\n"


def test_run_machine_tool_reports_errors():
    result = RunMachineTool().forward(graph="nodes 1\n0 0 0\n", program="3[0 :=]")
    assert result["success"] is False
    assert "origin 3" in result["error"]
    assert RunMachineTool().forward(graph="nodes x", program="")["success"] is False


def test_verify_gate_tool():
    result = VerifyGateTool().forward(gate="OR", seeds=4)
    assert result["success"] is True
    assert result["passed"] is True
    assert result["cases_checked"] == 16
    assert result["report"].endswith("PASS\n")


def test_verify_gate_tool_unknown_gate():
    result = VerifyGateTool().forward(gate="xor")
    assert result["success"] is False
    assert result["available_gates"] == ["not", "and", "or", "cond"]


def test_oracle_sweep_tool():
    result = OracleSweepTool().forward(nodes=2, max_path=2)
    assert result["success"] is True
    assert result["passed"] is True
    assert result["checks"]["postconditions"]["cases"] == 16 * 2 * 6 * 7


def test_oracle_sweep_tool_bounds():
    result = OracleSweepTool().forward(nodes=5)
    assert result["success"] is False


def test_tool_metadata():
    assert RunMachineTool().name == "run_machine"
    assert set(VerifyGateTool().inputs) == {"gate", "seeds"}
    assert OracleSweepTool().output_type == "object"


def test_run_machine_tool_rejects_zero_max_steps():
    result = RunMachineTool().forward(graph=COND_GRAPH, program=COND_PROGRAM, max_steps=0)
    assert result["success"] is False
    assert "max_steps" in result["error"]


def test_verify_gate_tool_rejects_zero_seeds():
    result = VerifyGateTool().forward(gate="not", seeds=0)
    assert result["success"] is False


def test_tools_take_defaults_from_settings(monkeypatch):
    import machine_tools.oracle_sweep as oracle_sweep
    import machine_tools.verify_gate as verify_gate
    from config.settings import GadgetDefaults, OracleDefaults, Settings

    settings = Settings(gadget=GadgetDefaults(seeds=3), oracle=OracleDefaults(max_path=1, programs=7, seed=1))
    monkeypatch.setattr(verify_gate, "load_settings", lambda: settings)
    monkeypatch.setattr(oracle_sweep, "load_settings", lambda: settings)

    assert VerifyGateTool().forward(gate="and")["cases_checked"] == 4 * 3
    checks = OracleSweepTool().forward(nodes=1)["checks"]
    assert checks["postconditions"]["cases"] == 1 * 1 * 2 * 3
    assert checks["fixed-construction"]["cases"] == 7
