# # The coupling loss between two encoders
#
# Both encoders see the same batch. Row i of H1 and row i of H2 describe the
# same image, so they form a positive pair; the other 2K - 2 features in the
# batch act as negatives. Similarities are cosines divided by a temperature.

# %%
import numpy as np
import torch

from cct.losses import (contrastive_loss_batch, contrastive_loss_view1, interleave)

# %% [markdown]
# The features are interleaved as h1[0], h2[0], h1[1], h2[1], ... before the
# softmax is taken over every slot except the anchor's own.

# %%
h1 = torch.eye(2, dtype=torch.float64)
h2 = torch.eye(2, dtype=torch.float64)
print(interleave(h1, h2))

# %% [markdown]
# With orthonormal features the anchor sees its positive at cosine 1 and two
# negatives at cosine 0: -log(e^2 / (e^2 + 2)).

# %%
print(contrastive_loss_view1(0, h1, h2, temperature=0.5).item(), -np.log(np.e**2 / (np.e**2 + 2)))
print("batch total", contrastive_loss_batch(h1, h2, 0.5).item())

# %% [markdown]
# Aligned views give a small loss; unrelated views give a large one. Scaling a
# feature vector changes nothing because only cosines enter.

# %%
rng = np.random.default_rng(0)
a = torch.from_numpy(rng.standard_normal((32, 16)))
noise = torch.from_numpy(rng.standard_normal((32, 16)))
for mix in (0.0, 0.5, 1.0, 3.0):
    b = a + mix * noise
    print(f"noise scale {mix}: loss {contrastive_loss_batch(a, b).item():.3f}")
print("scaled:", contrastive_loss_batch(a * 7.0, a + noise).item(), contrastive_loss_batch(a, a + noise).item())
