#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "acfofdm/modem.hpp"

namespace acfofdm {

enum class SignalDomain { BasebandComplex, PassbandReal };

// A sampled signal with its rate and domain tag. Passband signals are real
// waveforms carried in the complex container; their imaginary parts stay at
// (or within rounding of) zero.
struct ComplexSignal {
    std::vector<cplx> samples;
    double rate_hz = 0.0;
    SignalDomain domain = SignalDomain::BasebandComplex;

    std::size_t size() const { return samples.size(); }
};

// Block-level transmission parameters. sample_rate is bandwidth times the
// oversampling factor; cp_len counts guard samples at the subcarrier rate,
// so the oversampled prefix is cp_len * oversampling samples long.
struct OfdmConfig {
    std::size_t n = 128;           // subcarriers, power of two
    std::size_t oversampling = 8;  // L
    double bandwidth_hz = 1e6;
    double carrier_hz = 2e6;
    std::size_t cp_len = 32;       // guard length in subcarrier-rate samples
    Modulation modulation = Modulation::Qpsk;

    double sample_rate_hz() const { return bandwidth_hz * static_cast<double>(oversampling); }
    std::size_t oversampled_len() const { return n * oversampling; }
    std::size_t cp_oversampled() const { return cp_len * oversampling; }
    std::size_t bits_per_block() const { return n * static_cast<std::size_t>(bits_per_symbol(modulation)); }

    // Throws std::invalid_argument when any structural invariant fails.
    void validate() const;
};

} // namespace acfofdm
