"""The five training presets: when the classifier is active, how gamma grows,
and how often the gate hands the classifier a denoised latent.

    python3 demos/presets_and_gate.py
"""
import numpy as np

from classndiff.rng import RngStream
from classndiff.trainer import PRESETS, GateState, gamma_schedule, gate_select

total = 5000
marks = [0, 999, 1000, 2500, 3999, 4000, 4999]

print("setting  lambda  cadence  " + "  ".join(f"{m:>5d}" for m in marks))
for sid, preset in PRESETS.items():
    cells = []
    for m in marks:
        g = gamma_schedule(preset, m, total)
        cells.append(f"{g.gamma:5.2f}" if g.classifier_active else "    -")
    print(f"{sid:7d}  {preset.lam:6.1f}  {preset.cadence:7d}  " + "  ".join(cells))

# gate draws per sample; expected fraction = gamma
clean, den = np.zeros((8, 4, 8, 8)), np.ones((8, 4, 8, 8))
for gamma in (0.0, 0.1, 0.25, 0.4):
    rng = RngStream(0, 4)
    g = GateState(gamma, 0.2, True)
    hits = sum(int(gate_select(g, clean, den, rng)[1].sum()) for _ in range(1250))
    print(f"gamma {gamma:.2f}: denoised inputs {hits / 10000:.4f} of 10000 draws")
