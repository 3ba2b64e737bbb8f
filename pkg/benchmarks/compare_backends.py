#!/usr/bin/env python3
"""Time the compiled kernels against their pure-numpy fallbacks.

The package ships both implementations of each hot kernel: the numba
versions run by default, the numpy ones when LIMFB_BACKEND=numpy is set.
This script times the numba kernels against the numpy reference in one
process (run it without LIMFB_BACKEND so numba is active).

    python benchmarks/compare_backends.py
"""

import timeit

import numpy as np

from limfb import backend
from limfb.channel import ChannelSpec, PilotSpec, dft_pilot_matrix, pilot_observation, sample_channel, transmit_correlation
from limfb.codebook import dft_codebook
from limfb.neural import ArchSpec, build_model, packed_encoder
from limfb.rng import RngStream


def best_us(fn, number=2000):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number * 1e6


def main():
    print(f"active backend: {backend.active_backend()}")
    if backend.active_backend() != "numba":
        print("numba is not active; the comparison below times the numpy "
              "implementation against itself")
    ref = backend.numpy_reference
    rows = []

    # stochastic binarization on a training-sized batch
    g = RngStream(0).generator()
    z = np.clip(g.standard_normal((2000, 6)), -1, 1)
    u = g.random((2000, 6))
    rows.append(("binarize (2000, 6)",
                 best_us(lambda: backend.binarize_given_uniform(z, u)),
                 best_us(lambda: ref["binarize_given_uniform"](z, u))))

    # single-call receiver MLP inference at the figure scale (n_tx=8)
    for length in (2, 20):
        arch = ArchSpec(n_tx=8, n_rx=4, pilot_len=length, bits=6)
        model = build_model(arch, RngStream(1))
        flat, dims = packed_encoder(model)
        x = g.standard_normal(model.input_dim)
        backend.mlp_bipolar_infer(flat, dims, x)  # warm the JIT
        rows.append((f"encoder infer single (L={length})",
                     best_us(lambda: backend.mlp_bipolar_infer(flat, dims, x)),
                     best_us(lambda: ref["mlp_bipolar_infer"](flat, dims, x))))

    # single-call LMMSE + exhaustive codeword search
    for length in (2, 20):
        spec = ChannelSpec(n_tx=8, n_rx=4, t_mag=0.7, phase_policy="fixed",
                           psi=0.3)
        pilots = PilotSpec(length=length, pilot_energy=1.0, noise_var=1.0)
        p = dft_pilot_matrix(8, length)
        r_t = transmit_correlation(spec, 0.3)
        words = np.ascontiguousarray(dft_codebook(8, 6).words.T)
        sample = sample_channel(spec, RngStream(2))
        y = pilot_observation(sample, pilots, p, RngStream(3))
        backend.lmmse_pmi_online(y, p, r_t, 1.0, 1.0, words)  # warm the JIT
        rows.append((f"lmmse + pmi single (L={length})",
                     best_us(lambda: backend.lmmse_pmi_online(
                         y, p, r_t, 1.0, 1.0, words)),
                     best_us(lambda: ref["lmmse_pmi_online"](
                         y, p, r_t, 1.0, 1.0, words))))

    width = max(len(r[0]) for r in rows)
    print(f"\n{'kernel':<{width}}  {'active':>10}  {'numpy ref':>10}  speedup")
    for name, active, reference in rows:
        print(f"{name:<{width}}  {active:>8.2f}us  {reference:>8.2f}us  "
              f"x{reference / active:.2f}")


if __name__ == "__main__":
    main()
