# # Injecting label noise
#
# Two corruption models are supported. Symmetric noise moves a label, with
# probability tau, to one of the other classes chosen uniformly. Pairflip noise
# moves it to the next class, c -> c + 1 (mod M).

# %%
import numpy as np

from cct.noise import NoiseSpec, apply_noise, build_transition_matrix

np.set_printoptions(precision=3, suppress=True)

# %% [markdown]
# The transition matrix T[c, c'] gives the probability that true class c is
# observed as c'. Every row sums to one.

# %%
sym = build_transition_matrix(NoiseSpec("symmetric", 0.5, 5))
pair = build_transition_matrix(NoiseSpec("pairflip", 0.45, 5))
print(sym.entries)
print(pair.entries)

# %% [markdown]
# Sampling is counter based: sample i always consumes the i-th draw of the
# seeded stream, so a prefix of the dataset gets the same noise as the whole.

# %%
labels = np.random.default_rng(0).integers(0, 5, 10_000)
record = apply_noise(labels, sym, seed=3)
print("corrupted fraction", record.corruption_rate)
prefix = apply_noise(labels[:100], sym, seed=3)
print("prefix consistent", np.array_equal(prefix.noisy_labels, record.noisy_labels[:100]))

# %% [markdown]
# Confusion counts between true and observed labels for the pairflip model.

# %%
record = apply_noise(labels, pair, seed=3)
counts = np.zeros((5, 5), dtype=int)
np.add.at(counts, (labels, record.noisy_labels), 1)
print(counts)
