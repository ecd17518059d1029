# # Memorization under pairflip noise
#
# An MLP trained with plain cross entropy on 45% pairflip labels first fits the
# clean majority, then memorizes the flipped labels and its test accuracy
# falls. The co-trained transformer pair keeps its accuracy. Reads the cached
# runs of tests/mnist_plan.py and writes memorization.png.

# %%
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cct.harness import read_metrics

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance")


def curve(metrics):
    rows = read_metrics(metrics)
    epochs = sorted({r["epoch"] for r in rows})
    return epochs, [100 * np.mean([r["test_acc"] for r in rows if r["epoch"] == e]) for e in epochs]


# %%
fig, ax = plt.subplots(figsize=(6, 4))
for name, label in (("pf45_mlp_ce_single", "MLP, cross entropy"), ("pf45_cct", "transformer pair, cct"),
                    ("pf45_coteaching", "transformer pair, coteaching")):
    for i, metrics in enumerate(sorted((root / name).glob("seed_*/metrics.csv"))):
        epochs, acc = curve(metrics)
        print(f"{label:<30} seed {i}: peak {max(acc):.2f} at epoch {int(np.argmax(acc))}, final {acc[-1]:.2f}")
        ax.plot(epochs, acc, color=f"C{['pf45_mlp_ce_single', 'pf45_cct', 'pf45_coteaching'].index(name)}",
                label=label if i == 0 else None)
ax.set_xlabel("epoch")
ax.set_ylabel("test accuracy (%)")
ax.legend()
fig.tight_layout()
fig.savefig("memorization.png", dpi=120)
