# # MNIST comparison table
#
# Summarizes the MNIST runs produced by tests/mnist_plan.py (symmetric 50% and
# pairflip 45%, three seeds per mode). Fill the cache first with
#
#     CCT_DATA_DIR=/path/to/data python3 tests/mnist_plan.py

# %%
import sys
from pathlib import Path

from cct.harness import emit_summary

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance")
dirs = [d for d in sorted(root.iterdir()) if (d / "summary.json").exists()] if root.exists() else []
if not dirs:
    sys.exit(f"no finished runs under {root}")

# %%
print(emit_summary(dirs)["text"])
