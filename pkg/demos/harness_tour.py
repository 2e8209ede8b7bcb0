"""Drive the verification harness the way the CLI does.

Run with: python3 demos/harness_tour.py
"""

import json

from qmb import harness
from qmb.report import emit_report

CONFIGS = [
    {"suite": "axioms", "target": "sorgenfrey_rho_s", "samples": 300},
    {"suite": "conjugation", "target": "rho_upper", "samples": 300},
    {"suite": "uniform-equivalence", "target": "d_n", "other": "dplus_n"},
    {"suite": "properness", "target": "hawaiian", "base": "earring"},
    {"suite": "bornology", "target": "ex1_6"},
]


def main():
    for cfg in CONFIGS:
        rep = harness.run_suite(cfg)
        print(f"{json.dumps(cfg)}\n  -> {rep.status} (exit {rep.exit_code()})")
        for line in emit_report(rep, "text").decode().splitlines()[1:]:
            print("    " + line)
    print("\nThe same runs from a shell:")
    print("  qmb verify --suite properness --target hawaiian --config "
          "'{\"base\": \"earring\"}' --format text")
    print("  qmb zoo list")


if __name__ == "__main__":
    main()
