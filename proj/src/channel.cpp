#include "acfofdm/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace acfofdm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    const std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ULL);
}

} // namespace

BlockRng::BlockRng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

double BlockRng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double BlockRng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller; 1-u keeps the log argument in (0, 1]
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
    const double theta = 2.0 * std::numbers::pi * uniform01();
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

void BlockRng::fill_bits(std::span<std::uint8_t> out) {
    std::uint64_t word = 0;
    int avail = 0;
    for (auto& b : out) {
        if (avail == 0) {
            word = engine_();
            avail = 64;
        }
        b = static_cast<std::uint8_t>(word & 1u);
        word >>= 1;
        --avail;
    }
}

ComplexSignal add_awgn(const ComplexSignal& signal, const AwgnSpec& spec, const OfdmConfig& cfg) {
    if (signal.size() == 0) throw std::invalid_argument("add_awgn: empty signal");
    double power = 0.0;
    for (const cplx& v : signal.samples) power += std::norm(v);
    power /= static_cast<double>(signal.size());
    if (power <= 0.0) throw std::invalid_argument("add_awgn: zero-power signal");

    const double nl = static_cast<double>(cfg.oversampled_len());
    const double bits = static_cast<double>(cfg.bits_per_block());
    const double variance = power * nl / (2.0 * bits) * std::pow(10.0, -spec.ebn0_db / 10.0);
    const double sigma = std::sqrt(variance);

    BlockRng rng(spec.seed, spec.block_index);
    ComplexSignal out = signal;
    if (signal.domain == SignalDomain::PassbandReal) {
        for (auto& v : out.samples) v += cplx{sigma * rng.gaussian(), 0.0};
    } else {
        // complex baseband: same total noise power, split across both axes
        const double s = sigma / std::numbers::sqrt2;
        for (auto& v : out.samples) v += cplx{s * rng.gaussian(), s * rng.gaussian()};
    }
    return out;
}

BerSample measure_ber(std::span<const std::uint8_t> tx, std::span<const std::uint8_t> rx) {
    if (tx.size() != rx.size()) throw std::invalid_argument("measure_ber: length mismatch");
    if (tx.empty()) throw std::invalid_argument("measure_ber: empty streams");
    BerSample out;
    out.bits_sent = tx.size();
    for (std::size_t i = 0; i < tx.size(); ++i) {
        if ((tx[i] ^ rx[i]) & 1u) ++out.bit_errors;
    }
    return out;
}

} // namespace acfofdm
