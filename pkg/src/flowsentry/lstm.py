"""Batched LSTM primitives in float64 numpy with hand-written backprop.

Gate blocks are stacked as (input, forget, cell-candidate, output) along the
first axis of the weight matrices: W is (4H, D) input-to-hidden, U is (4H, H)
hidden-to-hidden, b is (4H,). All functions are pure; forward passes return
the cache consumed by the matching backward pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def sigmoid(x: np.ndarray) -> np.ndarray:
    # overflow-safe for large |x|
    z = np.exp(-np.abs(x))
    return np.where(x >= 0, 1.0 / (1.0 + z), z / (1.0 + z))


@dataclass
class LstmCache:
    inputs: np.ndarray  # (B, L, D)
    hs: np.ndarray      # (B, L+1, H), hs[:, 0] = h0
    cs: np.ndarray      # (B, L+1, H), cs[:, 0] = c0
    gi: np.ndarray      # (B, L, H) input gate, post-sigmoid
    gf: np.ndarray      # forget gate
    gg: np.ndarray      # cell candidate, post-tanh
    go: np.ndarray      # output gate
    tanh_c: np.ndarray  # (B, L, H)

    @property
    def outputs(self) -> np.ndarray:
        return self.hs[:, 1:]

    @property
    def last_hidden(self) -> np.ndarray:
        return self.hs[:, -1]


def lstm_forward(
    W: np.ndarray,
    U: np.ndarray,
    b: np.ndarray,
    inputs: np.ndarray,
    h0: np.ndarray | None = None,
    c0: np.ndarray | None = None,
) -> LstmCache:
    B, L, _ = inputs.shape
    H = U.shape[1]
    hs = np.zeros((B, L + 1, H))
    cs = np.zeros((B, L + 1, H))
    if h0 is not None:
        hs[:, 0] = h0
    if c0 is not None:
        cs[:, 0] = c0
    gi = np.empty((B, L, H))
    gf = np.empty((B, L, H))
    gg = np.empty((B, L, H))
    go = np.empty((B, L, H))
    tanh_c = np.empty((B, L, H))

    x_pre = inputs @ W.T  # (B, L, 4H), input contribution for all steps
    for t in range(L):
        pre = x_pre[:, t] + hs[:, t] @ U.T + b
        gi[:, t] = sigmoid(pre[:, :H])
        gf[:, t] = sigmoid(pre[:, H : 2 * H])
        gg[:, t] = np.tanh(pre[:, 2 * H : 3 * H])
        go[:, t] = sigmoid(pre[:, 3 * H :])
        cs[:, t + 1] = gf[:, t] * cs[:, t] + gi[:, t] * gg[:, t]
        tanh_c[:, t] = np.tanh(cs[:, t + 1])
        hs[:, t + 1] = go[:, t] * tanh_c[:, t]
    return LstmCache(inputs, hs, cs, gi, gf, gg, go, tanh_c)


def lstm_backward(
    W: np.ndarray,
    U: np.ndarray,
    cache: LstmCache,
    d_outputs: np.ndarray | None = None,
    d_h_last: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Backprop through time.

    ``d_outputs`` is the loss gradient w.r.t. every step's hidden output
    (may be None when only the final state matters); ``d_h_last`` is an
    extra gradient on the final hidden state. Returns
    (dW, dU, db, d_inputs, d_h0, d_c0).
    """
    B, L, H = cache.gi.shape
    gi, gf, gg, go, tanh_c = cache.gi, cache.gf, cache.gg, cache.go, cache.tanh_c
    d_pre = np.empty((B, L, 4 * H))
    dh = np.zeros((B, H)) if d_h_last is None else d_h_last.copy()
    dc = np.zeros((B, H))
    for t in range(L - 1, -1, -1):
        if d_outputs is not None:
            dh = dh + d_outputs[:, t]
        i, f, g, o, tc = gi[:, t], gf[:, t], gg[:, t], go[:, t], tanh_c[:, t]
        do = dh * tc
        dct = dc + dh * o * (1.0 - tc * tc)
        d_pre[:, t, :H] = dct * g * i * (1.0 - i)
        d_pre[:, t, H : 2 * H] = dct * cache.cs[:, t] * f * (1.0 - f)
        d_pre[:, t, 2 * H : 3 * H] = dct * i * (1.0 - g * g)
        d_pre[:, t, 3 * H :] = do * o * (1.0 - o)
        dh = d_pre[:, t] @ U
        dc = dct * f

    flat_pre = d_pre.reshape(B * L, 4 * H)
    dW = flat_pre.T @ cache.inputs.reshape(B * L, -1)
    dU = flat_pre.T @ cache.hs[:, :L].reshape(B * L, H)
    db = flat_pre.sum(axis=0)
    d_inputs = d_pre @ W
    return dW, dU, db, d_inputs, dh, dc
