#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace acfofdm {

using cplx = std::complex<double>;

// Gray-coded, unit-average-power constellations.
//
// QPSK bit pair (b0, b1): b0 selects the in-phase sign, b1 the quadrature
// sign, 0 mapping to +. Bits 00 give (1+j)/sqrt(2).
//
// 16-QAM nibble (b0, b1, b2, b3): (b0, b1) Gray-select the in-phase level,
// (b2, b3) the quadrature level, with 00->+3, 01->+1, 11->-1, 10->-3 on a
// grid scaled by 1/sqrt(10).
enum class Modulation { Qpsk, Qam16 };

int bits_per_symbol(Modulation scheme);
Modulation modulation_from_string(const std::string& name);
const char* modulation_name(Modulation scheme);

// All 2^bits_per_symbol points, indexed by the bit word read MSB-first.
const std::vector<cplx>& constellation(Modulation scheme);

// Throws std::invalid_argument when the bit count is not a multiple of
// bits_per_symbol.
std::vector<cplx> map_bits(std::span<const std::uint8_t> bits, Modulation scheme);

// Hard decision to the nearest constellation point; always decodes.
std::vector<std::uint8_t> demap_symbols(std::span<const cplx> points, Modulation scheme);

// Bit error probability over AWGN at the given Eb/N0.
// QPSK is exact: Q(sqrt(2*g)). 16-QAM uses the nearest-neighbour Gray
// approximation (3/4)*Q(sqrt(4*g/5)), which understates the rate slightly
// at low Eb/N0.
double analytical_ber(Modulation scheme, double ebn0_db);

} // namespace acfofdm
