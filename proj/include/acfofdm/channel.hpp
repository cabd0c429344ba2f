#pragma once

#include <cstdint>
#include <random>

#include "acfofdm/signal.hpp"

namespace acfofdm {

// Noise generation is fully determined by (seed, block_index); every block
// gets its own substream so results do not depend on how work is split
// across threads.
struct AwgnSpec {
    double ebn0_db = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t block_index = 0;
};

struct BerSample {
    double ebn0_db = 0.0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits_sent = 0;

    double ber() const { return bits_sent ? static_cast<double>(bit_errors) / static_cast<double>(bits_sent) : 0.0; }
};

// Deterministic substream RNG: a mixed (seed, stream) pair seeds a
// mt19937_64 whose raw words feed both the data bits and the Box-Muller
// Gaussian pairs. Identical on every standards-conforming platform.
class BlockRng {
public:
    BlockRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_word() { return engine_(); }
    double uniform01();         // [0, 1)
    double gaussian();          // standard normal
    void fill_bits(std::span<std::uint8_t> out);

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Adds real white Gaussian noise calibrated so the unclipped curve lands on
// the analytical BER reference:
//   sigma_n^2 = P_sig * NL / (2 * N * bits_per_symbol) * 10^(-Eb/N0 / 10)
// with P_sig the measured per-sample power of the given signal. Energy per
// bit is accounted over the prefix-stripped core block; the per-bin complex
// noise power after the receiver FFT then equals N0 with Es/N0 =
// bits_per_symbol * Eb/N0. Throws on a zero-power signal.
ComplexSignal add_awgn(const ComplexSignal& signal, const AwgnSpec& spec, const OfdmConfig& cfg);

// Hamming distance over equal-length bit streams.
BerSample measure_ber(std::span<const std::uint8_t> tx, std::span<const std::uint8_t> rx);

} // namespace acfofdm
