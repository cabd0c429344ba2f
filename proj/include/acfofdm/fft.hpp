#pragma once

#include <complex>
#include <span>
#include <vector>

namespace acfofdm {

using cplx = std::complex<double>;

// In-place DFT without normalization. Forward uses exp(-j2*pi*mk/M),
// inverse exp(+j2*pi*mk/M). Power-of-two lengths run the radix-2 path,
// all other lengths go through Bluestein's chirp transform.
void dft_in_place(std::span<cplx> data, bool inverse);

// Unitary transform pair: both directions scale by 1/sqrt(M), so
// fft_unitary(ifft_unitary(x)) == x and Parseval holds bin for bin.
std::vector<cplx> fft_unitary(std::span<const cplx> in);
std::vector<cplx> ifft_unitary(std::span<const cplx> in);

} // namespace acfofdm
