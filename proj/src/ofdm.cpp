#include "acfofdm/ofdm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acfofdm/fft.hpp"

namespace acfofdm {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
}

void OfdmConfig::validate() const {
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("OfdmConfig: n must be a power of two >= 2");
    if (oversampling < 1) throw std::invalid_argument("OfdmConfig: oversampling factor must be >= 1");
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("OfdmConfig: bandwidth must be positive");
    if (carrier_hz <= 0.0 || carrier_hz >= sample_rate_hz() / 2.0) {
        throw std::invalid_argument("OfdmConfig: carrier must lie in (0, sample_rate/2)");
    }
    if (cp_len >= n) throw std::invalid_argument("OfdmConfig: cyclic prefix must be shorter than the block");
}

std::vector<cplx> zero_pad_center(std::span<const cplx> block, std::size_t oversampling) {
    if (oversampling < 1) throw std::invalid_argument("zero_pad_center: oversampling factor must be >= 1");
    const std::size_t n = block.size();
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("zero_pad_center: block length must be even and nonzero");
    const std::size_t nl = n * oversampling;
    std::vector<cplx> out(nl, cplx{0.0, 0.0});
    for (std::size_t k = 0; k <= n / 2; ++k) out[k] = block[k];
    for (std::size_t k = n / 2 + 1; k < n; ++k) out[k + n * (oversampling - 1)] = block[k];
    return out;
}

std::vector<cplx> extract_subcarriers(std::span<const cplx> spectrum, std::size_t n) {
    const std::size_t nl = spectrum.size();
    if (n == 0 || n % 2 != 0 || nl < n || nl % n != 0) {
        throw std::invalid_argument("extract_subcarriers: incompatible lengths");
    }
    const std::size_t l = nl / n;
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k <= n / 2; ++k) out[k] = spectrum[k];
    for (std::size_t k = n / 2 + 1; k < n; ++k) out[k] = spectrum[k + n * (l - 1)];
    return out;
}

ComplexSignal ifft_oversampled(std::span<const cplx> spectrum, double sample_rate_hz) {
    ComplexSignal sig;
    sig.samples = ifft_unitary(spectrum);
    sig.rate_hz = sample_rate_hz;
    sig.domain = SignalDomain::BasebandComplex;
    return sig;
}

std::vector<cplx> forward_fft(const ComplexSignal& signal) {
    return fft_unitary(signal.samples);
}

ComplexSignal add_cyclic_prefix(const ComplexSignal& signal, std::size_t prefix_len) {
    if (prefix_len > signal.size()) {
        throw std::invalid_argument("add_cyclic_prefix: prefix longer than the block");
    }
    ComplexSignal out;
    out.rate_hz = signal.rate_hz;
    out.domain = signal.domain;
    out.samples.reserve(signal.size() + prefix_len);
    out.samples.insert(out.samples.end(), signal.samples.end() - static_cast<std::ptrdiff_t>(prefix_len),
                       signal.samples.end());
    out.samples.insert(out.samples.end(), signal.samples.begin(), signal.samples.end());
    return out;
}

ComplexSignal remove_cyclic_prefix(const ComplexSignal& signal, std::size_t prefix_len) {
    if (prefix_len > signal.size()) {
        throw std::invalid_argument("remove_cyclic_prefix: prefix longer than the signal");
    }
    ComplexSignal out;
    out.rate_hz = signal.rate_hz;
    out.domain = signal.domain;
    out.samples.assign(signal.samples.begin() + static_cast<std::ptrdiff_t>(prefix_len), signal.samples.end());
    return out;
}

ComplexSignal upconvert(const ComplexSignal& baseband, double carrier_hz, std::int64_t phase_origin) {
    const double fs = baseband.rate_hz;
    if (carrier_hz <= 0.0 || carrier_hz >= fs / 2.0) {
        throw std::invalid_argument("upconvert: carrier must lie in (0, sample_rate/2)");
    }
    ComplexSignal out;
    out.rate_hz = fs;
    out.domain = SignalDomain::PassbandReal;
    out.samples.resize(baseband.size());
    const double w = 2.0 * std::numbers::pi * carrier_hz / fs;
    for (std::size_t m = 0; m < baseband.size(); ++m) {
        const double ang = w * static_cast<double>(static_cast<std::int64_t>(m) + phase_origin);
        const cplx c{std::cos(ang), std::sin(ang)};
        out.samples[m] = {kSqrt2 * (baseband.samples[m] * c).real(), 0.0};
    }
    return out;
}

ComplexSignal downconvert(const ComplexSignal& passband, double carrier_hz, double cutoff_hz,
                          std::int64_t phase_origin) {
    const double fs = passband.rate_hz;
    if (carrier_hz <= 0.0 || carrier_hz >= fs / 2.0) {
        throw std::invalid_argument("downconvert: carrier must lie in (0, sample_rate/2)");
    }
    const std::size_t m_len = passband.size();
    if (m_len == 0) {
        return {.samples = {}, .rate_hz = fs, .domain = SignalDomain::BasebandComplex};
    }
    std::vector<cplx> mixed(m_len);
    const double w = 2.0 * std::numbers::pi * carrier_hz / fs;
    for (std::size_t m = 0; m < m_len; ++m) {
        const double ang = -w * static_cast<double>(static_cast<std::int64_t>(m) + phase_origin);
        mixed[m] = kSqrt2 * passband.samples[m] * cplx{std::cos(ang), std::sin(ang)};
    }
    dft_in_place(mixed, false);
    const double bin_hz = fs / static_cast<double>(m_len);
    const double keep = cutoff_hz * (1.0 + 1e-12);
    for (std::size_t k = 0; k < m_len; ++k) {
        const double f = bin_hz * (k <= m_len / 2 ? static_cast<double>(k)
                                                  : static_cast<double>(k) - static_cast<double>(m_len));
        if (std::abs(f) > keep) mixed[k] = {0.0, 0.0};
    }
    dft_in_place(mixed, true);
    const double inv = 1.0 / static_cast<double>(m_len);
    for (auto& v : mixed) v *= inv;
    return {.samples = std::move(mixed), .rate_hz = fs, .domain = SignalDomain::BasebandComplex};
}

double papr_db(std::span<const cplx> samples) {
    if (samples.empty()) throw std::invalid_argument("papr_db: empty signal");
    double peak = 0.0;
    double sum = 0.0;
    for (const cplx& v : samples) {
        const double p = std::norm(v);
        peak = std::max(peak, p);
        sum += p;
    }
    if (sum == 0.0) throw std::domain_error("papr_db: undefined for an all-zero signal");
    const double mean = sum / static_cast<double>(samples.size());
    return 10.0 * std::log10(peak / mean);
}

double papr_db(const ComplexSignal& signal) { return papr_db(std::span<const cplx>(signal.samples)); }

} // namespace acfofdm
