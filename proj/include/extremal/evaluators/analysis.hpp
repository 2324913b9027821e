#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extremal/types.hpp"

namespace extremal {

// ---------------------------------------------------------------------------
// Shared transform routines. Each has two implementations: the production
// FFT-backed path and a direct quadratic path kept as an independent check
// (tests cross-validate them; callers can pick either).
// ---------------------------------------------------------------------------

// Linear self-convolution: out[m] = sum_{i+j=m} h[i] h[j], m in [0, 2K-2].
std::vector<double> autoconv_linear_fft(std::span<const double> heights);
std::vector<double> autoconv_linear_direct(std::span<const double> heights);

// |P(e^{2*pi*i*j/m})| for j in [0, m), P(z) = sum_k signs[k] z^k. m >= signs
// required. FFT path and direct evaluation path.
std::vector<double> littlewood_magnitudes_fft(std::span<const int> signs, std::size_t m);
std::vector<double> littlewood_magnitudes_direct(std::span<const int> signs, std::size_t m);

// ---------------------------------------------------------------------------
// Evaluators.
// ---------------------------------------------------------------------------

struct AutoconvConfig {
    int K = 128; // step count over the length-1 support
};

// Step density on [-1/2, 1/2], dx = 1/K. The payload is L1-normalized to unit
// mass internally, then raw = max_t (f*f)(t) (lower better). For uniform-grid
// step functions the discrete convolution samples land on every breakpoint of
// the piecewise-linear f*f, so the grid max equals the exact sup.
// Reasons: "count", "nonfinite", "negative" (h < 0), "mass" (zero integral).
// Metrics: integral (= 1 after normalization), K.
EvalResult eval_autoconv_peak(const AutoconvConfig &config, const StepHeights &payload);

struct C3Config {
    int N = 4; // interval count over [-1/4, 1/4], dx = 1/(2N)
};

// Signed step function on [-1/4, 1/4]. Scale-free upper-bound functional
//   raw = max_t |(f*f)(t)| / (integral f)^2     (lower better),
// with the max again exact on the 2N+1 uniform grid over [-1/2, 1/2].
// Reasons: "count", "nonfinite", "mass" ((integral)^2 < 1e-18).
// Metrics: integral, N, conv_max (= max |f*f| before normalization).
EvalResult eval_c3_bound(const C3Config &config, const SignedHeights &payload);

struct LittlewoodConfig {
    int n = 512;        // coefficient count
    int oversample = 16; // sample grid size m = oversample * n
};

// raw = max_j |P| over the m-point grid on the unit circle (lower better); a
// denser grid can only tighten this sampled sup upward. Parseval gives
// mean |P|^2 = n on any grid with m >= n, so raw >= sqrt(n) always.
// Reasons: "count" (empty or != config.n), "sign" (entry not +/-1).
// Metrics: M (grid size), sqrt_2n_bound.
EvalResult eval_littlewood(const LittlewoodConfig &config, const SignSequence &payload);

} // namespace extremal
