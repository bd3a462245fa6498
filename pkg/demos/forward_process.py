"""Walk through the noise schedule: how much signal survives at each timestep,
what a noised latent looks like, and how the one-step z0 estimate inverts it.

    python3 demos/forward_process.py
"""
import numpy as np

from classndiff import tensor as T
from classndiff.diffusion import build_schedule, predict_z0, q_sample
from classndiff.rng import RngStream

sched = build_schedule(1000)   # linear betas 1e-4 .. 0.02

print("   t   alpha_bar     SNR   post.var")
for t in (1, 10, 100, 250, 500, 750, 1000):
    ab = sched.alpha_bar[t - 1]
    print(f"{t:4d}  {ab:10.3e}  {ab / (1 - ab):8.3e}  {sched.posterior_variance[t - 1]:.3e}")

# one latent, noised at increasing t; correlation with the clean latent decays with sqrt(alpha_bar)
rng = RngStream(0, 3)
z = rng.normal((1, 4, 8, 8))
for t in (1, 100, 500, 1000):
    eps = rng.normal(z.shape)
    zt = q_sample(z, t, eps, sched).z_t
    r = np.corrcoef(z.ravel(), zt.ravel())[0, 1]
    print(f"t={t:4d}  corr(z, z_t)={r:+.3f}  expected {np.sqrt(sched.alpha_bar[t - 1]):.3f}")

# with the true noise, the z0 estimate is exact (up to round-off)
for dtype in (np.float32, np.float64):
    with T.default_dtype(dtype):
        worst = 0.0
        for t in (1, 500, 1000):
            eps = rng.normal(z.shape)
            back = predict_z0(q_sample(z, t, eps, sched).z_t, eps, t, sched).data
            worst = max(worst, np.abs(back - z).max() / np.abs(z).max())
    print(f"{np.dtype(dtype).name}: worst relative inversion error {worst:.1e}")

# a 250-step sampler walks a strided subset of the same alpha_bar curve
steps = sched.respaced_steps(250)
print("respaced steps:", steps[:4], "...", steps[-3:])
