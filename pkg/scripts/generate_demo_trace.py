#!/usr/bin/env python3
"""Regenerate data/experiment_trace.csv.

The bundled trace is synthetic: a clean closed-form step response of the
higher-damping system identified from a real bench capture of the demo
circuit (xi ~ 0.1073, wd ~ 9951.2 rad/s), scaled to a 2 V step with a
0.2 V offset and a pre-trigger plateau, sampled at 2 us.  It stands in for
the oscilloscope capture, which is not redistributable.
"""

import csv
from pathlib import Path

import numpy as np

from rlcband import step_response_curve

XI = 0.10727654785269201
OMEGA_D = 9951.196
OMEGA_0 = OMEGA_D / float(np.sqrt(1.0 - XI * XI))

SCALE_V = 2.0
OFFSET_V = 0.2
DT = 2e-6
T_PRE = 2e-3
T_POST = 24.8e-3


def build_samples():
    t = np.arange(-round(T_PRE / DT), round(T_POST / DT) + 1, dtype=np.float64) * DT
    v = np.full(t.size, OFFSET_V)
    after = t >= 0.0
    v[after] = OFFSET_V + SCALE_V * step_response_curve(XI, OMEGA_0, OMEGA_D, t[after])
    return t, v


def main() -> None:
    t, v = build_samples()
    out = Path(__file__).resolve().parent.parent / "data" / "experiment_trace.csv"
    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "v"])
        for ti, vi in zip(t, v):
            writer.writerow([f"{ti:.10g}", f"{vi:.10g}"])
    print(f"wrote {out} ({t.size} samples)")


if __name__ == "__main__":
    main()
