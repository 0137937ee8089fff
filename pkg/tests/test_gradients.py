"""Finite-difference verification of the analytic joint-loss gradients.

The oracle is central differences on the scalar loss; it never touches the
backward pass it checks.
"""

import numpy as np
import pytest

from flowsentry.model import ModelConfig, init_model
from flowsentry.trainer import TrainConfig, loss_and_grads


def finite_difference_grads(model, A, P, N, cfg, etas, h=1e-5):
    grads = {}
    for name, p in model.params.items():
        flat = p.ravel()
        out = np.empty_like(flat)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + h
            lp, _ = loss_and_grads(model, A, P, N, cfg, etas, want_grads=False)
            flat[i] = orig - h
            lm, _ = loss_and_grads(model, A, P, N, cfg, etas, want_grads=False)
            flat[i] = orig
            out[i] = (lp.total - lm.total) / (2 * h)
        grads[name] = out.reshape(p.shape)
    return grads


def max_relative_error(analytic, numeric, floor=1e-8):
    worst = 0.0
    for name in analytic:
        a, f = analytic[name].ravel(), numeric[name].ravel()
        denom = np.maximum(np.maximum(np.abs(a), np.abs(f)), floor)
        worst = max(worst, float(np.max(np.abs(a - f) / denom)))
    return worst


def make_batch(cfg, batch=2, length=3, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.uniform(0, 1, (batch, length, cfg.input_dim))
    P = np.clip(A + rng.uniform(-0.05, 0.05, A.shape), 0, 1)
    N = rng.uniform(0, 1, (batch, length, cfg.input_dim))
    etas = None
    if cfg.variational:
        etas = tuple(rng.standard_normal((batch, cfg.latent_dim)) for _ in range(3))
    return A, P, N, etas


@pytest.mark.parametrize(
    "mode,num_layers,lam_kl",
    [
        ("deterministic", 1, 0.0),
        ("deterministic", 2, 0.0),
        ("variational", 1, 0.1),
    ],
)
def test_joint_loss_gradients_match_finite_differences(mode, num_layers, lam_kl):
    cfg = ModelConfig(
        input_dim=2, hidden_dim=4, latent_dim=3, num_layers=num_layers,
        mode=mode, seed=42,
    )
    model = init_model(cfg)
    A, P, N, etas = make_batch(cfg, seed=7)
    tcfg = TrainConfig(lam_rec=0.7, lam_tml=0.3, lam_kl=lam_kl, margin=1.0, epochs=1)
    _, analytic = loss_and_grads(model, A, P, N, tcfg, etas)
    numeric = finite_difference_grads(model, A, P, N, tcfg, etas)
    assert max_relative_error(analytic, numeric) < 1e-4


def test_reconstruction_only_gradients():
    cfg = ModelConfig(input_dim=2, hidden_dim=4, latent_dim=3, seed=5)
    model = init_model(cfg)
    A, P, N, _ = make_batch(cfg, seed=3)
    tcfg = TrainConfig(lam_rec=1.0, lam_tml=0.0, epochs=1)
    _, analytic = loss_and_grads(model, A, P, N, tcfg)
    numeric = finite_difference_grads(model, A, P, N, tcfg, None)
    assert max_relative_error(analytic, numeric) < 1e-4


def test_triplet_only_gradients():
    cfg = ModelConfig(input_dim=2, hidden_dim=4, latent_dim=3, seed=6)
    model = init_model(cfg)
    A, P, N, _ = make_batch(cfg, seed=4)
    tcfg = TrainConfig(lam_rec=0.0, lam_tml=1.0, epochs=1)
    _, analytic = loss_and_grads(model, A, P, N, tcfg)
    numeric = finite_difference_grads(model, A, P, N, tcfg, None)
    assert max_relative_error(analytic, numeric) < 1e-4


def test_gradients_deterministic():
    cfg = ModelConfig(input_dim=2, hidden_dim=4, latent_dim=3, seed=8)
    model = init_model(cfg)
    A, P, N, _ = make_batch(cfg, seed=9)
    tcfg = TrainConfig(lam_rec=0.6, lam_tml=0.4, epochs=1)
    _, g1 = loss_and_grads(model, A, P, N, tcfg)
    _, g2 = loss_and_grads(model, A, P, N, tcfg)
    for k in g1:
        np.testing.assert_array_equal(g1[k], g2[k])
