# # Small-loss selection with peer exchange
#
# Each encoder ranks the batch by its own cross entropy and hands its R
# smallest-loss samples to the other encoder for the supervised update. R
# starts at the full batch and ramps down to (1 - tau) K over T_k epochs.

# %%
import numpy as np

from cct.selection import ScheduleConfig, cross_exchange, remember_count, selection_precision

# %%
schedule = ScheduleConfig(tau=0.5, warmup_epochs=10)
print([remember_count(e, 128, schedule) for e in range(14)])

# %% [markdown]
# Simulate a network that has learned the clean samples: clean labels get small
# losses, flipped labels get large ones, both with overlap.

# %%
rng = np.random.default_rng(0)
corrupted = rng.random(128) < 0.5
losses1 = np.where(corrupted, rng.gamma(4.0, 0.6, 128), rng.gamma(1.0, 0.3, 128))
losses2 = np.where(corrupted, rng.gamma(4.0, 0.6, 128), rng.gamma(1.0, 0.3, 128))

for epoch in (0, 5, 10):
    sel = cross_exchange(losses1, losses2, remember_count(epoch, 128, schedule))
    print(f"epoch {epoch:2d}: R={sel.remember:3d}  precision of D1 {selection_precision(sel.d1, corrupted):.3f}"
          f"  of D2 {selection_precision(sel.d2, corrupted):.3f}")

# %% [markdown]
# D1 depends only on encoder 2's losses, so an encoder never picks its own
# training set.

# %%
other = cross_exchange(rng.random(128), losses2, 64)
print(np.array_equal(other.d1, cross_exchange(losses1, losses2, 64).d1))
