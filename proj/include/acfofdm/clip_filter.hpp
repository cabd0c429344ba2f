#pragma once

#include <optional>
#include <span>
#include <string>

#include "acfofdm/signal.hpp"

namespace acfofdm {

// How the clipping threshold's reference RMS is obtained: from the symbol
// being clipped, or from a fixed ensemble value supplied by the caller.
enum class SigmaMode { PerSymbol, Ensemble };

struct ClippingSpec {
    double cr = 1.0;  // clipping ratio A / sigma
    SigmaMode sigma_mode = SigmaMode::PerSymbol;
    double ensemble_rms = 0.0;  // used when sigma_mode == Ensemble
};

struct ClipResult {
    ComplexSignal signal;
    double amplitude = 0.0;   // the A that was applied
    bool degenerate = false;  // all-zero input passed through untouched
};

double rms(const ComplexSignal& signal);
double rms(std::span<const cplx> samples);

// Hard amplitude limiter. Passband-real signals clip the real waveform to
// [-amplitude, +amplitude]; complex baseband signals are magnitude-limited
// with their phase kept.
ComplexSignal clip_passband(const ComplexSignal& signal, double amplitude);

// Clip at A = cr * sigma. A zero-power input would give A = 0; such blocks
// pass through unchanged with the degenerate flag set.
ClipResult clip_by_cr(const ComplexSignal& signal, const ClippingSpec& spec);

// Chebyshev polynomial of the first kind via the stable three-term
// recurrence; equals cos(n*acos(x)) on [-1, 1].
double chebyshev_polynomial(unsigned n, double x);

enum class FilterKind { IdealMask, Fir, Chebyshev1 };

// Complex gain on the length-nl FFT bin grid, conjugate symmetric so real
// signals stay real through frequency-domain filtering.
struct FilterResponse {
    std::vector<cplx> h;
    FilterKind kind = FilterKind::IdealMask;

    std::size_t grid_len() const { return h.size(); }
};

struct Biquad {
    double b0, b1, b2;
    double a0, a1, a2;
};

struct ChebyshevSpec {
    unsigned order = 1;        // analog low-pass prototype order; band-pass order is 2x
    double ripple_db = 2.0;    // passband ripple, > 0
    double f_low_hz = 1.0e6;   // lower band edge
    double f_high_hz = 3.0e6;  // upper band edge

    double ripple_epsilon() const;
};

// A realized Chebyshev Type I band-pass: second-order sections plus the
// digital pole/zero/gain form they came from. Peak passband gain is
// normalized to one.
struct ChebyshevDesign {
    ChebyshevSpec spec;
    double sample_rate_hz = 0.0;
    std::vector<Biquad> sections;
    std::vector<cplx> zeros;
    std::vector<cplx> poles;
    double gain = 1.0;

    // Evaluate H(e^{jw}) at a single frequency from the pole-zero product.
    cplx response_at(double freq_hz) const;
    // Same frequency, evaluated through the cascaded second-order sections.
    cplx sos_response_at(double freq_hz) const;
    // Response on the length-nl bin grid (pole-zero route), conjugate symmetric.
    FilterResponse response_grid(std::size_t nl) const;
    // One section per line: b0 b1 b2 a0 a1 a2, full decimal precision.
    std::string sos_text() const;
};

// Analog prototype -> pre-warped low-pass-to-band-pass transform ->
// bilinear mapping. Throws on order 0 or edges outside (0, fs/2).
ChebyshevDesign design_chebyshev1_bandpass(const ChebyshevSpec& spec, double sample_rate_hz);

// Brick-wall in-band mask: unity on [f_low, f_high] and its mirror, zero
// elsewhere. The conventional composed-filter baseline.
FilterResponse ideal_mask_response(double f_low_hz, double f_high_hz, std::size_t nl,
                                   double sample_rate_hz);

// Linear-phase Hamming windowed-sinc band-pass evaluated on the bin grid,
// passband peak normalized to one. taps must be odd and >= 3.
FilterResponse fir_bandpass_response(std::size_t taps, double f_low_hz, double f_high_hz,
                                     std::size_t nl, double sample_rate_hz);

// FFT -> bin-wise multiply -> inverse FFT. The signal length must equal the
// response grid length.
ComplexSignal composed_filter(const ComplexSignal& signal, const FilterResponse& response);

} // namespace acfofdm
