#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "acfofdm/fft.hpp"

using acfofdm::cplx;

namespace {

// Independent O(M^2) reference transform.
std::vector<cplx> dft_direct(const std::vector<cplx>& in, bool inverse) {
    const std::size_t m = in.size();
    std::vector<cplx> out(m);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < m; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(i) / static_cast<double>(m);
            acc += in[i] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[k] = acc;
    }
    return out;
}

std::vector<cplx> random_vector(std::size_t m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(m);
    for (auto& x : v) x = {u(rng), u(rng)};
    return v;
}

double max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

} // namespace

TEST_CASE("dft matches the direct sum on power-of-two lengths") {
    for (std::size_t m : {std::size_t{2}, std::size_t{8}, std::size_t{64}, std::size_t{1024}}) {
        auto v = random_vector(m, 11 + static_cast<unsigned>(m));
        auto expect = dft_direct(v, false);
        auto got = v;
        acfofdm::dft_in_place(got, false);
        CHECK(max_err(got, expect) < 1e-9 * static_cast<double>(m));
    }
}

TEST_CASE("bluestein path matches the direct sum on awkward lengths") {
    for (std::size_t m : {std::size_t{3}, std::size_t{12}, std::size_t{100}, std::size_t{384},
                          std::size_t{1280}}) {
        auto v = random_vector(m, 37 + static_cast<unsigned>(m));
        auto expect = dft_direct(v, false);
        auto got = v;
        acfofdm::dft_in_place(got, false);
        CHECK(max_err(got, expect) < 1e-9 * static_cast<double>(m));

        auto inv_expect = dft_direct(v, true);
        auto inv_got = v;
        acfofdm::dft_in_place(inv_got, true);
        CHECK(max_err(inv_got, inv_expect) < 1e-9 * static_cast<double>(m));
    }
}

TEST_CASE("unitary pair inverts and preserves energy") {
    for (std::size_t m : {std::size_t{16}, std::size_t{384}, std::size_t{1024}}) {
        const auto v = random_vector(m, 5 + static_cast<unsigned>(m));
        const auto spec = acfofdm::fft_unitary(v);
        const auto back = acfofdm::ifft_unitary(spec);
        CHECK(max_err(back, v) < 1e-12);

        double e_time = 0.0;
        double e_freq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            e_time += std::norm(v[i]);
            e_freq += std::norm(spec[i]);
        }
        CHECK(e_freq == doctest::Approx(e_time).epsilon(1e-12));
    }
}

TEST_CASE("empty input is rejected") {
    std::vector<cplx> v;
    CHECK_THROWS_AS(acfofdm::dft_in_place(v, false), std::invalid_argument);
}
