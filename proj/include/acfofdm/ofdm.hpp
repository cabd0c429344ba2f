#pragma once

#include <span>

#include "acfofdm/signal.hpp"

namespace acfofdm {

// Central zero padding for L-times oversampling. The lower half of the
// spectrum including bin n/2 is copied to the head of the long grid, bins
// n/2+1 .. n-1 wrap to the tail, and the n*(L-1) slots in between stay
// zero. The mirrored Nyquist slot is one of those zeros; bin n/2 is copied
// once, into the lower half only.
std::vector<cplx> zero_pad_center(std::span<const cplx> block, std::size_t oversampling);

// Inverse of zero_pad_center: gathers the n populated bins back out of the
// oversampled grid.
std::vector<cplx> extract_subcarriers(std::span<const cplx> spectrum, std::size_t n);

// Unitary oversampled transforms between spectrum and time signal, both
// scaled by 1/sqrt(len) so they are exact inverses and Parseval holds.
ComplexSignal ifft_oversampled(std::span<const cplx> spectrum, double sample_rate_hz);
std::vector<cplx> forward_fft(const ComplexSignal& signal);

// Guard interval handling; prefix_len is in samples at the signal's rate.
ComplexSignal add_cyclic_prefix(const ComplexSignal& signal, std::size_t prefix_len);
ComplexSignal remove_cyclic_prefix(const ComplexSignal& signal, std::size_t prefix_len);

// Real passband conversion, x_p[m] = sqrt(2) * Re{x[m] e^{j 2 pi f_c (m + origin) / f_s}}.
// The sqrt(2) keeps the average power equal between baseband and passband.
// phase_origin shifts the carrier index for signals that do not start at
// sample zero of the transmit chain (e.g. after prefix removal).
ComplexSignal upconvert(const ComplexSignal& baseband, double carrier_hz,
                        std::int64_t phase_origin = 0);

// Inverse of upconvert: mixes down with the conjugate carrier, then applies
// an ideal brick-wall low-pass on the signal's own DFT grid retaining
// |f| <= cutoff_hz. Exact for signals band-limited on that grid.
ComplexSignal downconvert(const ComplexSignal& passband, double carrier_hz,
                          double cutoff_hz, std::int64_t phase_origin = 0);

// Peak-to-average power ratio in dB: 10*log10(max|x|^2 / mean|x|^2).
// Throws std::domain_error for an all-zero signal.
double papr_db(std::span<const cplx> samples);
double papr_db(const ComplexSignal& signal);

} // namespace acfofdm
