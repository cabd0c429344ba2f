#include "acfofdm/modem.hpp"

#include <cmath>
#include <stdexcept>

namespace acfofdm {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt10 = 0.31622776601683793320;

// Gray pair -> amplitude level, index = (b_hi << 1) | b_lo.
constexpr double kGrayLevel[4] = {+3.0, +1.0, -3.0, -1.0};

// level index 0..3 left to right (-3,-1,+1,+3) -> Gray pair
constexpr std::uint8_t kLevelBits[4][2] = {{1, 0}, {1, 1}, {0, 1}, {0, 0}};

double qfunc(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

} // namespace

int bits_per_symbol(Modulation scheme) {
    return scheme == Modulation::Qpsk ? 2 : 4;
}

Modulation modulation_from_string(const std::string& name) {
    if (name == "qpsk" || name == "QPSK") return Modulation::Qpsk;
    if (name == "qam16" || name == "QAM16" || name == "16qam") return Modulation::Qam16;
    throw std::invalid_argument("unknown modulation: " + name);
}

const char* modulation_name(Modulation scheme) {
    return scheme == Modulation::Qpsk ? "qpsk" : "qam16";
}

const std::vector<cplx>& constellation(Modulation scheme) {
    static const std::vector<cplx> qpsk = [] {
        std::vector<cplx> pts(4);
        for (int w = 0; w < 4; ++w) {
            const double i = (w & 2) ? -kInvSqrt2 : kInvSqrt2;
            const double q = (w & 1) ? -kInvSqrt2 : kInvSqrt2;
            pts[w] = {i, q};
        }
        return pts;
    }();
    static const std::vector<cplx> qam16 = [] {
        std::vector<cplx> pts(16);
        for (int w = 0; w < 16; ++w) {
            const double i = kGrayLevel[(w >> 2) & 3] * kInvSqrt10;
            const double q = kGrayLevel[w & 3] * kInvSqrt10;
            pts[w] = {i, q};
        }
        return pts;
    }();
    return scheme == Modulation::Qpsk ? qpsk : qam16;
}

std::vector<cplx> map_bits(std::span<const std::uint8_t> bits, Modulation scheme) {
    const int bps = bits_per_symbol(scheme);
    if (bits.size() % static_cast<std::size_t>(bps) != 0) {
        throw std::invalid_argument("map_bits: bit count not divisible by bits per symbol");
    }
    const auto& points = constellation(scheme);
    std::vector<cplx> out(bits.size() / static_cast<std::size_t>(bps));
    for (std::size_t s = 0; s < out.size(); ++s) {
        unsigned word = 0;
        for (int b = 0; b < bps; ++b) word = (word << 1) | (bits[s * bps + b] & 1u);
        out[s] = points[word];
    }
    return out;
}

namespace {

// level index along one axis for the scaled grid {-3,-1,+1,+3}/sqrt(10),
// decision thresholds at -2, 0, +2 (scaled). Ties resolve upward.
int qam_axis_index(double v) {
    const double u = v / kInvSqrt10;
    if (u < -2.0) return 0;
    if (u < 0.0) return 1;
    if (u < 2.0) return 2;
    return 3;
}

} // namespace

std::vector<std::uint8_t> demap_symbols(std::span<const cplx> points, Modulation scheme) {
    std::vector<std::uint8_t> bits;
    bits.reserve(points.size() * static_cast<std::size_t>(bits_per_symbol(scheme)));
    if (scheme == Modulation::Qpsk) {
        for (const cplx& p : points) {
            bits.push_back(p.real() < 0.0 ? 1 : 0);
            bits.push_back(p.imag() < 0.0 ? 1 : 0);
        }
    } else {
        for (const cplx& p : points) {
            const int ii = qam_axis_index(p.real());
            const int qi = qam_axis_index(p.imag());
            bits.push_back(kLevelBits[ii][0]);
            bits.push_back(kLevelBits[ii][1]);
            bits.push_back(kLevelBits[qi][0]);
            bits.push_back(kLevelBits[qi][1]);
        }
    }
    return bits;
}

double analytical_ber(Modulation scheme, double ebn0_db) {
    if (!std::isfinite(ebn0_db)) throw std::invalid_argument("analytical_ber: Eb/N0 must be finite");
    const double gamma = std::pow(10.0, ebn0_db / 10.0);
    if (scheme == Modulation::Qpsk) {
        return qfunc(std::sqrt(2.0 * gamma));
    }
    return 0.75 * qfunc(std::sqrt(0.8 * gamma));
}

} // namespace acfofdm
