#include "acfofdm/clip_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "acfofdm/fft.hpp"

namespace acfofdm {

double rms(std::span<const cplx> samples) {
    if (samples.empty()) throw std::invalid_argument("rms: empty signal");
    double sum = 0.0;
    for (const cplx& v : samples) sum += std::norm(v);
    return std::sqrt(sum / static_cast<double>(samples.size()));
}

double rms(const ComplexSignal& signal) { return rms(std::span<const cplx>(signal.samples)); }

ComplexSignal clip_passband(const ComplexSignal& signal, double amplitude) {
    if (amplitude <= 0.0) throw std::invalid_argument("clip_passband: amplitude must be positive");
    ComplexSignal out = signal;
    if (signal.domain == SignalDomain::PassbandReal) {
        for (auto& v : out.samples) {
            const double x = v.real();
            if (x >= amplitude) {
                v = {amplitude, v.imag()};
            } else if (x <= -amplitude) {
                v = {-amplitude, v.imag()};
            }
        }
    } else {
        for (auto& v : out.samples) {
            const double mag = std::abs(v);
            if (mag >= amplitude && mag > 0.0) v *= amplitude / mag;
        }
    }
    return out;
}

ClipResult clip_by_cr(const ComplexSignal& signal, const ClippingSpec& spec) {
    if (spec.cr <= 0.0) throw std::invalid_argument("clip_by_cr: clipping ratio must be positive");
    const double sigma = spec.sigma_mode == SigmaMode::PerSymbol ? rms(signal) : spec.ensemble_rms;
    if (sigma <= 0.0) {
        return {.signal = signal, .amplitude = 0.0, .degenerate = true};
    }
    const double a = spec.cr * sigma;
    return {.signal = clip_passband(signal, a), .amplitude = a, .degenerate = false};
}

double chebyshev_polynomial(unsigned n, double x) {
    if (n == 0) return 1.0;
    if (n == 1) return x;
    double tm2 = 1.0;
    double tm1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        const double t = 2.0 * x * tm1 - tm2;
        tm2 = tm1;
        tm1 = t;
    }
    return tm1;
}

double ChebyshevSpec::ripple_epsilon() const {
    return std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
}

namespace {

cplx eval_rational_at(const std::vector<cplx>& zeros, const std::vector<cplx>& poles, double gain,
                      cplx z) {
    cplx num{gain, 0.0};
    for (const cplx& q : zeros) num *= (z - q);
    cplx den{1.0, 0.0};
    for (const cplx& p : poles) den *= (z - p);
    return num / den;
}

} // namespace

cplx ChebyshevDesign::response_at(double freq_hz) const {
    const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
    return eval_rational_at(zeros, poles, gain, cplx{std::cos(w), std::sin(w)});
}

cplx ChebyshevDesign::sos_response_at(double freq_hz) const {
    const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
    const cplx zinv = cplx{std::cos(w), -std::sin(w)};
    const cplx zinv2 = zinv * zinv;
    cplx h{1.0, 0.0};
    for (const Biquad& s : sections) {
        h *= (s.b0 + s.b1 * zinv + s.b2 * zinv2) / (s.a0 + s.a1 * zinv + s.a2 * zinv2);
    }
    return h;
}

FilterResponse ChebyshevDesign::response_grid(std::size_t nl) const {
    FilterResponse r;
    r.kind = FilterKind::Chebyshev1;
    r.h.resize(nl);
    const double bin_hz = sample_rate_hz / static_cast<double>(nl);
    for (std::size_t k = 0; k <= nl / 2; ++k) {
        r.h[k] = response_at(bin_hz * static_cast<double>(k));
    }
    for (std::size_t k = nl / 2 + 1; k < nl; ++k) {
        r.h[k] = std::conj(r.h[nl - k]);
    }
    // bins 0 and nl/2 sit on the real axis; drop their rounding-level
    // imaginary residue so conjugate symmetry is bin-exact
    r.h[0] = {r.h[0].real(), 0.0};
    if (nl % 2 == 0) r.h[nl / 2] = {r.h[nl / 2].real(), 0.0};
    return r;
}

std::string ChebyshevDesign::sos_text() const {
    std::ostringstream out;
    out.precision(17);
    for (const Biquad& s : sections) {
        out << s.b0 << ' ' << s.b1 << ' ' << s.b2 << ' ' << s.a0 << ' ' << s.a1 << ' ' << s.a2 << '\n';
    }
    return out.str();
}

ChebyshevDesign design_chebyshev1_bandpass(const ChebyshevSpec& spec, double sample_rate_hz) {
    if (spec.order < 1) throw std::invalid_argument("chebyshev design: prototype order must be >= 1");
    if (spec.ripple_db <= 0.0) throw std::invalid_argument("chebyshev design: ripple must be positive");
    if (!(spec.f_low_hz > 0.0 && spec.f_low_hz < spec.f_high_hz &&
          spec.f_high_hz < sample_rate_hz / 2.0)) {
        throw std::invalid_argument("chebyshev design: band edges must satisfy 0 < f_low < f_high < fs/2");
    }

    const unsigned n = spec.order;
    const double eps = spec.ripple_epsilon();
    const double mu = std::asinh(1.0 / eps) / static_cast<double>(n);

    // analog low-pass prototype poles on the Chebyshev ellipse
    std::vector<cplx> lp_poles(n);
    for (unsigned k = 1; k <= n; ++k) {
        const double theta = std::numbers::pi * (2.0 * k - 1.0) / (2.0 * n);
        lp_poles[k - 1] = {-std::sinh(mu) * std::sin(theta), std::cosh(mu) * std::cos(theta)};
    }
    cplx k_lp{1.0, 0.0};
    for (const cplx& p : lp_poles) k_lp *= -p;
    double gain = k_lp.real();
    if (n % 2 == 0) gain /= std::sqrt(1.0 + eps * eps);

    // pre-warped band edges and low-pass -> band-pass transform
    const double fs2 = 2.0 * sample_rate_hz;
    const double wl = fs2 * std::tan(std::numbers::pi * spec.f_low_hz / sample_rate_hz);
    const double wh = fs2 * std::tan(std::numbers::pi * spec.f_high_hz / sample_rate_hz);
    const double w0 = std::sqrt(wl * wh);
    const double bw = wh - wl;

    std::vector<cplx> bp_poles;
    bp_poles.reserve(2 * n);
    for (const cplx& p : lp_poles) {
        const cplx scaled = p * (bw / 2.0);
        const cplx disc = std::sqrt(scaled * scaled - w0 * w0);
        bp_poles.push_back(scaled + disc);
        bp_poles.push_back(scaled - disc);
    }
    gain *= std::pow(bw, static_cast<double>(n));

    // bilinear transform; n analog zeros at s = 0 map to z = +1, the n
    // zeros at infinity land on z = -1
    ChebyshevDesign design;
    design.spec = spec;
    design.sample_rate_hz = sample_rate_hz;
    design.poles.reserve(2 * n);
    cplx den_prod{1.0, 0.0};
    for (const cplx& s : bp_poles) {
        design.poles.push_back((fs2 + s) / (fs2 - s));
        den_prod *= (fs2 - s);
    }
    design.zeros.assign(n, cplx{1.0, 0.0});
    design.zeros.insert(design.zeros.end(), n, cplx{-1.0, 0.0});
    const cplx k_digital = gain * std::pow(fs2, static_cast<double>(n)) / den_prod;
    design.gain = k_digital.real();

    // normalize the passband peak to one on a dense grid over the band
    double peak = 0.0;
    const int probes = 4096;
    for (int i = 0; i <= probes; ++i) {
        const double f = spec.f_low_hz + (spec.f_high_hz - spec.f_low_hz) * i / probes;
        peak = std::max(peak, std::abs(design.response_at(f)));
    }
    design.gain /= peak;

    // second-order sections: each conjugate pole pair takes one z=+1 and
    // one z=-1 zero, numerator (z-1)(z+1); the overall gain rides on the
    // first section
    std::vector<cplx> upper;
    std::vector<double> reals;
    for (const cplx& p : design.poles) {
        if (p.imag() > 1e-12) {
            upper.push_back(p);
        } else if (std::abs(p.imag()) <= 1e-12) {
            reals.push_back(p.real());
        }
    }
    std::sort(upper.begin(), upper.end(), [](const cplx& a, const cplx& b) {
        return std::abs(a) > std::abs(b);
    });
    std::sort(reals.begin(), reals.end());
    for (const cplx& p : upper) {
        design.sections.push_back({1.0, 0.0, -1.0, 1.0, -2.0 * p.real(), std::norm(p)});
    }
    for (std::size_t i = 0; i + 1 < reals.size(); i += 2) {
        design.sections.push_back({1.0, 0.0, -1.0, 1.0, -(reals[i] + reals[i + 1]), reals[i] * reals[i + 1]});
    }
    if (!design.sections.empty()) {
        design.sections.front().b0 *= design.gain;
        design.sections.front().b2 *= design.gain;
    }
    return design;
}

FilterResponse ideal_mask_response(double f_low_hz, double f_high_hz, std::size_t nl,
                                   double sample_rate_hz) {
    if (!(f_low_hz > 0.0 && f_low_hz < f_high_hz && f_high_hz < sample_rate_hz / 2.0)) {
        throw std::invalid_argument("ideal mask: band edges must satisfy 0 < f_low < f_high < fs/2");
    }
    FilterResponse r;
    r.kind = FilterKind::IdealMask;
    r.h.assign(nl, cplx{0.0, 0.0});
    const double bin_hz = sample_rate_hz / static_cast<double>(nl);
    const double lo = f_low_hz * (1.0 - 1e-12);
    const double hi = f_high_hz * (1.0 + 1e-12);
    for (std::size_t k = 0; k < nl; ++k) {
        const double f = bin_hz * static_cast<double>(k);
        const double fm = sample_rate_hz - f;  // mirror image frequency
        if ((f >= lo && f <= hi) || (fm >= lo && fm <= hi)) r.h[k] = {1.0, 0.0};
    }
    return r;
}

FilterResponse fir_bandpass_response(std::size_t taps, double f_low_hz, double f_high_hz,
                                     std::size_t nl, double sample_rate_hz) {
    if (taps < 3 || taps % 2 == 0) throw std::invalid_argument("fir design: taps must be odd and >= 3");
    if (!(f_low_hz > 0.0 && f_low_hz < f_high_hz && f_high_hz < sample_rate_hz / 2.0)) {
        throw std::invalid_argument("fir design: band edges must satisfy 0 < f_low < f_high < fs/2");
    }
    if (taps > nl) throw std::invalid_argument("fir design: taps exceed the bin grid length");

    const auto sinc = [](double x) {
        if (x == 0.0) return 1.0;
        const double px = std::numbers::pi * x;
        return std::sin(px) / px;
    };

    const std::size_t mid = (taps - 1) / 2;
    const double fl = f_low_hz / sample_rate_hz;
    const double fh = f_high_hz / sample_rate_hz;
    std::vector<double> h(taps);
    for (std::size_t i = 0; i < taps; ++i) {
        const double t = static_cast<double>(i) - static_cast<double>(mid);
        const double ideal = 2.0 * fh * sinc(2.0 * fh * t) - 2.0 * fl * sinc(2.0 * fl * t);
        const double window =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / (taps - 1));
        h[i] = ideal * window;
    }

    FilterResponse r;
    r.kind = FilterKind::Fir;
    r.h.resize(nl);
    const double bin_hz = sample_rate_hz / static_cast<double>(nl);
    for (std::size_t k = 0; k <= nl / 2; ++k) {
        const double w = 2.0 * std::numbers::pi * bin_hz * static_cast<double>(k) / sample_rate_hz;
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < taps; ++i) {
            const double ang = -w * static_cast<double>(i);
            acc += h[i] * cplx{std::cos(ang), std::sin(ang)};
        }
        r.h[k] = acc;
    }
    for (std::size_t k = nl / 2 + 1; k < nl; ++k) r.h[k] = std::conj(r.h[nl - k]);
    r.h[0] = {r.h[0].real(), 0.0};
    if (nl % 2 == 0) r.h[nl / 2] = {r.h[nl / 2].real(), 0.0};

    double peak = 0.0;
    for (std::size_t k = 0; k <= nl / 2; ++k) {
        const double f = bin_hz * static_cast<double>(k);
        if (f >= f_low_hz && f <= f_high_hz) peak = std::max(peak, std::abs(r.h[k]));
    }
    for (auto& v : r.h) v /= peak;
    return r;
}

ComplexSignal composed_filter(const ComplexSignal& signal, const FilterResponse& response) {
    if (signal.size() != response.grid_len()) {
        throw std::invalid_argument("composed_filter: signal length does not match the response grid");
    }
    std::vector<cplx> spectrum(signal.samples.begin(), signal.samples.end());
    dft_in_place(spectrum, false);
    for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum[k] *= response.h[k];
    dft_in_place(spectrum, true);
    const double inv = 1.0 / static_cast<double>(spectrum.size());
    for (auto& v : spectrum) v *= inv;
    ComplexSignal out;
    out.samples = std::move(spectrum);
    out.rate_hz = signal.rate_hz;
    out.domain = signal.domain;
    return out;
}

} // namespace acfofdm
