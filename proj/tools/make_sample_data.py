#!/usr/bin/env python3
"""Regenerates data/sample_trends.csv, the bundled ILLUSTRATIVE trend dataset.

The rows are synthetic: drawn around hand-chosen exponential trends with
log-normal scatter, using a fixed seed so the file is reproducible. They are
not measurements of real devices. See data/README.md for the inclusion rules.
"""
import numpy as np

rng = np.random.RandomState(20250101)

# (platform, metric, years, log10 value at 2025, OOM/yr, log10 scatter, label, rounding)
TRENDS = [
    ("superconducting", "physical_qubits", range(2016, 2026), np.log10(300), 0.20, 0.35, "synthetic-sc", "int"),
    ("superconducting", "two_qubit_gate_error", range(2016, 2026), np.log10(5e-3), -0.045, 0.18, "synthetic-sc", "sig3"),
    ("superconducting", "two_qubit_gate_time_s", range(2016, 2026), np.log10(6e-8), 0.0, 0.06, "synthetic-sc", "sig3"),
    ("ion_trap", "physical_qubits", range(2016, 2026), np.log10(40), 0.18, 0.25, "synthetic-ion", "int"),
    ("ion_trap", "two_qubit_gate_error", range(2016, 2026), np.log10(1.5e-3), -0.09, 0.15, "synthetic-ion", "sig3"),
    ("ion_trap", "two_qubit_gate_time_s", range(2016, 2026), np.log10(5e-4), -0.01, 0.10, "synthetic-ion", "sig3"),
    ("neutral_atom", "physical_qubits", range(2020, 2026), np.log10(250), 0.25, 0.30, "synthetic-na", "int"),
    ("neutral_atom", "two_qubit_gate_error", range(2020, 2026), np.log10(6e-3), -0.06, 0.12, "synthetic-na", "sig3"),
    ("neutral_atom", "two_qubit_gate_time_s", range(2020, 2026), np.log10(4e-7), -0.01, 0.10, "synthetic-na", "sig3"),
]

rows = []
for platform, metric, years, lv2025, slope, sd, label, rounding in TRENDS:
    for y in years:
        for k in range(rng.randint(2, 5)):
            month = rng.randint(0, 12)
            year = y + month / 12.0
            lv = lv2025 + slope * (year - 2025) + rng.normal(0.0, sd)
            v = 10 ** lv
            if rounding == "int":
                v = max(2, int(round(v)))
                vs = str(v)
            else:
                vs = "%.3g" % v
            rows.append((round(year, 3), platform, metric, vs, "%s-%d-%d" % (label, y, k)))

with open("data/sample_trends.csv", "w", newline="\n") as f:
    f.write("year,platform,metric,value,source\n")
    for r in rows:
        f.write("%s,%s,%s,%s,%s\n" % ((("%g" % r[0]),) + r[1:]))
print(len(rows), "rows")
