#include "acfofdm/fft.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace acfofdm {

namespace {

// Twiddle tables are shared across calls; the table for length M holds
// exp(-j*pi*k/M) for k in [0, M), enough for every butterfly stage.
class TwiddleCache {
public:
    std::shared_ptr<const std::vector<cplx>> get(std::size_t m) {
        std::lock_guard lock(mutex_);
        auto it = tables_.find(m);
        if (it != tables_.end()) return it->second;
        auto table = std::make_shared<std::vector<cplx>>(m);
        for (std::size_t k = 0; k < m; ++k) {
            const double ang = -std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
            (*table)[k] = {std::cos(ang), std::sin(ang)};
        }
        tables_.emplace(m, table);
        return tables_[m];
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::size_t, std::shared_ptr<const std::vector<cplx>>> tables_;
};

TwiddleCache& twiddles() {
    static TwiddleCache cache;
    return cache;
}

void radix2_in_place(std::span<cplx> a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto table = twiddles().get(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;  // index step into the exp(-j*pi*k/(n/2)) table
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx w = (*table)[2 * k * stride];
                if (inverse) w = std::conj(w);
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

struct BluesteinPlan {
    std::size_t m = 0;
    std::size_t padded = 0;
    std::vector<cplx> chirp;          // exp(-j*pi*k^2/M), forward direction
    std::vector<cplx> kernel_fft;     // FFT of the padded conjugate chirp
};

std::shared_ptr<const BluesteinPlan> bluestein_plan(std::size_t m) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::shared_ptr<const BluesteinPlan>> plans;
    std::lock_guard lock(mutex);
    auto it = plans.find(m);
    if (it != plans.end()) return it->second;

    auto plan = std::make_shared<BluesteinPlan>();
    plan->m = m;
    plan->padded = std::bit_ceil(2 * m - 1);
    plan->chirp.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        // k^2 mod 2M keeps the argument small; exp is 2M-periodic in k^2.
        const std::size_t q = (k * k) % (2 * m);
        const double ang = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(m);
        plan->chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<cplx> kernel(plan->padded, cplx{0.0, 0.0});
    kernel[0] = std::conj(plan->chirp[0]);
    for (std::size_t k = 1; k < m; ++k) {
        kernel[k] = std::conj(plan->chirp[k]);
        kernel[plan->padded - k] = std::conj(plan->chirp[k]);
    }
    radix2_in_place(kernel, false);
    plan->kernel_fft = std::move(kernel);
    plans.emplace(m, plan);
    return plans[m];
}

void bluestein_in_place(std::span<cplx> a, bool inverse) {
    const std::size_t m = a.size();
    if (inverse) {
        // IDFT(x) = conj(DFT(conj(x))), no scaling in either direction here.
        for (auto& v : a) v = std::conj(v);
        bluestein_in_place(a, false);
        for (auto& v : a) v = std::conj(v);
        return;
    }
    const auto plan = bluestein_plan(m);
    std::vector<cplx> work(plan->padded, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < m; ++k) work[k] = a[k] * plan->chirp[k];
    radix2_in_place(work, false);
    for (std::size_t k = 0; k < plan->padded; ++k) work[k] *= plan->kernel_fft[k];
    radix2_in_place(work, true);
    const double inv = 1.0 / static_cast<double>(plan->padded);
    for (std::size_t k = 0; k < m; ++k) a[k] = work[k] * inv * plan->chirp[k];
}

} // namespace

void dft_in_place(std::span<cplx> data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0) throw std::invalid_argument("dft_in_place: empty input");
    if (std::has_single_bit(n)) {
        radix2_in_place(data, inverse);
    } else {
        bluestein_in_place(data, inverse);
    }
}

std::vector<cplx> fft_unitary(std::span<const cplx> in) {
    std::vector<cplx> out(in.begin(), in.end());
    dft_in_place(out, false);
    const double s = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (auto& v : out) v *= s;
    return out;
}

std::vector<cplx> ifft_unitary(std::span<const cplx> in) {
    std::vector<cplx> out(in.begin(), in.end());
    dft_in_place(out, true);
    const double s = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (auto& v : out) v *= s;
    return out;
}

} // namespace acfofdm
