#include "extremal/evaluators/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace extremal {
namespace {

EvalResult invalid_lower(std::string reason) {
    EvalResult result;
    result.valid = false;
    result.raw_metric = std::numeric_limits<double>::infinity();
    result.score = -1.0;
    result.reason = std::move(reason);
    return result;
}

// FFTW planning is not thread-safe; execution of a private plan is.
std::mutex &fftw_plan_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t count)
        : data(static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * count))) {
        if (!data)
            throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer &) = delete;
    FftwBuffer &operator=(const FftwBuffer &) = delete;
    fftw_complex *data;
};

// Forward complex DFT of `input` zero-padded to length m.
void dft_forward(std::span<const double> input, std::size_t m, FftwBuffer &out) {
    FftwBuffer in(m);
    for (std::size_t i = 0; i < m; ++i) {
        in.data[i][0] = i < input.size() ? input[i] : 0.0;
        in.data[i][1] = 0.0;
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(m), in.data, out.data, FFTW_FORWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
}

} // namespace

std::vector<double> autoconv_linear_fft(std::span<const double> heights) {
    if (heights.empty())
        return {};
    const std::size_t k = heights.size();
    const std::size_t m = 2 * k - 1;

    FftwBuffer spectrum(m);
    dft_forward(heights, m, spectrum);
    // Pointwise square, then inverse transform; /m normalization is ours.
    FftwBuffer squared(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double re = spectrum.data[i][0];
        const double im = spectrum.data[i][1];
        squared.data[i][0] = re * re - im * im;
        squared.data[i][1] = 2.0 * re * im;
    }
    FftwBuffer back(m);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(m), squared.data, back.data, FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> conv(m);
    for (std::size_t i = 0; i < m; ++i)
        conv[i] = back.data[i][0] / static_cast<double>(m);
    return conv;
}

std::vector<double> autoconv_linear_direct(std::span<const double> heights) {
    if (heights.empty())
        return {};
    const std::size_t k = heights.size();
    std::vector<double> conv(2 * k - 1, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            conv[i + j] += heights[i] * heights[j];
    return conv;
}

std::vector<double> littlewood_magnitudes_fft(std::span<const int> signs, std::size_t m) {
    if (signs.empty() || m < signs.size())
        throw std::invalid_argument("littlewood_magnitudes: need m >= coefficient count");
    std::vector<double> coeffs(signs.begin(), signs.end());
    FftwBuffer spectrum(m);
    dft_forward(coeffs, m, spectrum);
    std::vector<double> magnitudes(m);
    for (std::size_t i = 0; i < m; ++i)
        magnitudes[i] = std::hypot(spectrum.data[i][0], spectrum.data[i][1]);
    return magnitudes;
}

std::vector<double> littlewood_magnitudes_direct(std::span<const int> signs, std::size_t m) {
    if (signs.empty() || m < signs.size())
        throw std::invalid_argument("littlewood_magnitudes: need m >= coefficient count");
    std::vector<double> magnitudes(m);
    const double step = 2.0 * 3.14159265358979323846 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
        // Horner evaluation of P at z = e^{-i theta_j}, matching the DFT's
        // sign convention (the magnitude is convention-independent anyway).
        const double theta = step * static_cast<double>(j);
        const std::complex<double> z(std::cos(theta), -std::sin(theta));
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = signs.size(); k-- > 0;)
            acc = acc * z + static_cast<double>(signs[k]);
        magnitudes[j] = std::abs(acc);
    }
    return magnitudes;
}

EvalResult eval_autoconv_peak(const AutoconvConfig &config, const StepHeights &payload) {
    const auto &h = payload.heights;
    if (h.empty() || static_cast<int>(h.size()) != config.K)
        return invalid_lower("count");
    for (double v : h) {
        if (!std::isfinite(v))
            return invalid_lower("nonfinite");
        if (v < 0.0)
            return invalid_lower("negative");
    }

    const double dx = 1.0 / static_cast<double>(config.K);
    double integral = 0.0;
    for (double v : h)
        integral += v * dx;
    if (integral <= 0.0)
        return invalid_lower("mass");

    std::vector<double> normalized(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        normalized[i] = h[i] / integral;

    const auto conv = autoconv_linear_fft(normalized);
    double peak = 0.0;
    for (double v : conv)
        peak = std::max(peak, v); // clamps FFT's tiny negatives implicitly
    const double mu_inf = peak * dx;

    EvalResult result;
    result.valid = true;
    result.raw_metric = mu_inf;
    result.score = 1.0 / mu_inf;
    result.metrics["integral"] = 1.0;
    result.metrics["K"] = static_cast<double>(config.K);
    return result;
}

EvalResult eval_c3_bound(const C3Config &config, const SignedHeights &payload) {
    const auto &h = payload.heights;
    if (h.empty() || static_cast<int>(h.size()) != config.N)
        return invalid_lower("count");
    for (double v : h)
        if (!std::isfinite(v))
            return invalid_lower("nonfinite");

    const double dx = 1.0 / (2.0 * static_cast<double>(config.N));
    double integral = 0.0;
    for (double v : h)
        integral += v * dx;
    if (integral * integral < 1e-18)
        return invalid_lower("mass");

    // For indicator steps, (f*f) is piecewise linear with every breakpoint on
    // the grid t_k = -1/2 + k*dx, where (f*f)(t_k) = dx * sum_{i+j=k-1} h_i h_j
    // (zero at both endpoints). The grid max is therefore the exact sup.
    const auto conv = autoconv_linear_direct(h);
    double conv_peak = 0.0;
    for (double v : conv)
        conv_peak = std::max(conv_peak, std::abs(v));
    const double max_conv_val = conv_peak * dx;
    const double c3 = max_conv_val / (integral * integral);

    EvalResult result;
    result.valid = true;
    result.raw_metric = c3;
    result.score = 1.0 / c3;
    result.metrics["integral"] = integral;
    result.metrics["N"] = static_cast<double>(config.N);
    result.metrics["conv_max"] = max_conv_val;
    return result;
}

EvalResult eval_littlewood(const LittlewoodConfig &config, const SignSequence &payload) {
    const auto &signs = payload.signs;
    if (signs.empty() || static_cast<int>(signs.size()) != config.n)
        return invalid_lower("count");
    for (int s : signs)
        if (s != 1 && s != -1)
            return invalid_lower("sign");

    const std::size_t m = static_cast<std::size_t>(config.oversample) *
                          static_cast<std::size_t>(config.n);
    const auto magnitudes = littlewood_magnitudes_fft(signs, m);
    const double sup = *std::max_element(magnitudes.begin(), magnitudes.end());

    EvalResult result;
    result.valid = true;
    result.raw_metric = sup;
    result.score = 1.0 / sup;
    result.metrics["M"] = static_cast<double>(m);
    result.metrics["sqrt_2n_bound"] = std::sqrt(2.0 * static_cast<double>(config.n));
    return result;
}

} // namespace extremal
