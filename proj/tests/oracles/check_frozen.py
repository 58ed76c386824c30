#!/usr/bin/env python3
"""Re-run the value oracle and compare with the frozen JSON files."""
import json
import subprocess
import sys

oracle, data = sys.argv[1], sys.argv[2]
ok = True
for policy, fname in (("paper", "mdp_n3_initial_values.json"), ("terminal", "mdp_n3_terminal_values.json")):
    out = json.loads(subprocess.check_output([sys.executable, oracle, "3", policy]))
    with open(f"{data}/{fname}") as f:
        frozen = json.load(f)
    same = out == frozen
    ok = ok and same
    print(f"{fname}: {'match' if same else 'MISMATCH'}")
sys.exit(0 if ok else 1)
