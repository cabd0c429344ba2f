#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "acfofdm/channel.hpp"
#include "acfofdm/modem.hpp"

using acfofdm::cplx;
using acfofdm::Modulation;

namespace {

std::vector<std::uint8_t> bits_of_word(unsigned word, int width) {
    std::vector<std::uint8_t> bits(width);
    for (int b = 0; b < width; ++b) bits[b] = (word >> (width - 1 - b)) & 1u;
    return bits;
}

} // namespace

TEST_CASE("qpsk maps the documented Gray convention") {
    const auto pts = acfofdm::map_bits(std::vector<std::uint8_t>{0, 0, 0, 1, 1, 0, 1, 1},
                                       Modulation::Qpsk);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(pts[0] - cplx{s, s}) < 1e-15);
    CHECK(std::abs(pts[1] - cplx{s, -s}) < 1e-15);
    CHECK(std::abs(pts[2] - cplx{-s, s}) < 1e-15);
    CHECK(std::abs(pts[3] - cplx{-s, -s}) < 1e-15);
}

TEST_CASE("constellations have unit average power") {
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16}) {
        const auto& pts = acfofdm::constellation(m);
        double mean = 0.0;
        for (const cplx& p : pts) mean += std::norm(p);
        mean /= static_cast<double>(pts.size());
        CHECK(std::abs(mean - 1.0) < 1e-12);
    }
}

TEST_CASE("empirical symbol power approaches one") {
    acfofdm::BlockRng rng(123, 0);
    std::vector<std::uint8_t> bits(400000);
    rng.fill_bits(bits);
    const auto pts = acfofdm::map_bits(bits, Modulation::Qam16);  // 1e5 symbols
    double mean = 0.0;
    for (const cplx& p : pts) mean += std::norm(p);
    mean /= static_cast<double>(pts.size());
    // mapped fourth moment is 1.32, so the 3-sigma band is ~0.0054 wide
    CHECK(std::abs(mean - 1.0) < 0.006);
}

TEST_CASE("map rejects ragged bit streams") {
    CHECK_THROWS_AS(acfofdm::map_bits(std::vector<std::uint8_t>{0, 1, 0}, Modulation::Qpsk),
                    std::invalid_argument);
    CHECK_THROWS_AS(acfofdm::map_bits(std::vector<std::uint8_t>{0, 1, 0, 1, 1}, Modulation::Qam16),
                    std::invalid_argument);
}

TEST_CASE("noiseless round trip restores the bits") {
    acfofdm::BlockRng rng(77, 1);
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint8_t> bits(64 * acfofdm::bits_per_symbol(m));
            rng.fill_bits(bits);
            const auto rx = acfofdm::demap_symbols(acfofdm::map_bits(bits, m), m);
            CHECK(rx == bits);
        }
    }
}

TEST_CASE("minimum-distance neighbours differ in exactly one bit") {
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16}) {
        const auto& pts = acfofdm::constellation(m);
        const int bps = acfofdm::bits_per_symbol(m);
        double dmin = 1e9;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                dmin = std::min(dmin, std::abs(pts[a] - pts[b]));
            }
        }
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                if (std::abs(pts[a] - pts[b]) > dmin * 1.0001) continue;
                const unsigned diff = static_cast<unsigned>(a) ^ static_cast<unsigned>(b);
                int bit_changes = 0;
                for (int i = 0; i < bps; ++i) bit_changes += (diff >> i) & 1u;
                CHECK(bit_changes == 1);
            }
        }
    }
}

TEST_CASE("nearest-point demapping by quadrant") {
    const double s = 1.0 / std::sqrt(2.0);
    const auto bits = acfofdm::demap_symbols(std::vector<cplx>{cplx{0.9 * s, 1.1 * s}},
                                             Modulation::Qpsk);
    CHECK(bits == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("perturbations below half the minimum distance never flip a decision") {
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16}) {
        const auto& pts = acfofdm::constellation(m);
        const int bps = acfofdm::bits_per_symbol(m);
        double dmin = 1e9;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                dmin = std::min(dmin, std::abs(pts[a] - pts[b]));
            }
        }
        const double radius = 0.499 * dmin;
        for (std::size_t w = 0; w < pts.size(); ++w) {
            const auto expect = bits_of_word(static_cast<unsigned>(w), bps);
            for (int gx = -4; gx <= 4; ++gx) {
                for (int gy = -4; gy <= 4; ++gy) {
                    const cplx d{radius * gx / 4.0, radius * gy / 4.0};
                    if (std::abs(d) >= radius) continue;
                    const auto got = acfofdm::demap_symbols(std::vector<cplx>{pts[w] + d}, m);
                    CHECK(got == expect);
                }
            }
        }
    }
}

TEST_CASE("analytical BER reference values") {
    // frozen from a high-precision complementary-error-function evaluation
    CHECK(acfofdm::analytical_ber(Modulation::Qpsk, 0.0) ==
          doctest::Approx(0.078649603525142565).epsilon(1e-12));
    CHECK(acfofdm::analytical_ber(Modulation::Qpsk, 6.0) ==
          doctest::Approx(0.0023882907809328063).epsilon(1e-10));
    CHECK(acfofdm::analytical_ber(Modulation::Qam16, 0.0) ==
          doctest::Approx(0.13916001357101159).epsilon(1e-12));
    CHECK(acfofdm::analytical_ber(Modulation::Qam16, 6.0) ==
          doctest::Approx(0.027871306319660707).epsilon(1e-10));
    CHECK(acfofdm::analytical_ber(Modulation::Qpsk, 200.0) < 1e-300);
}

TEST_CASE("analytical BER is strictly decreasing in Eb/N0") {
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16}) {
        double prev = 1.0;
        for (double db = -10.0; db <= 12.0; db += 0.5) {
            const double v = acfofdm::analytical_ber(m, db);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("non-finite Eb/N0 is rejected") {
    CHECK_THROWS_AS(acfofdm::analytical_ber(Modulation::Qpsk, std::nan("")),
                    std::invalid_argument);
}
