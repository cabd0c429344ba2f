#include "acfofdm/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acfofdm/fft.hpp"
#include "acfofdm/modem.hpp"
#include "acfofdm/ofdm.hpp"

namespace acfofdm {

Pipeline pipeline_from_string(const std::string& name) {
    if (name == "none") return Pipeline::None;
    if (name == "existing") return Pipeline::Existing;
    if (name == "proposed") return Pipeline::Proposed;
    throw std::invalid_argument("unknown pipeline: " + name);
}

const char* pipeline_name(Pipeline p) {
    switch (p) {
        case Pipeline::None: return "none";
        case Pipeline::Existing: return "existing";
        default: return "proposed";
    }
}

Equalizer equalizer_from_string(const std::string& name) {
    if (name == "none") return Equalizer::None;
    if (name == "delay") return Equalizer::Delay;
    if (name == "zf") return Equalizer::Zf;
    throw std::invalid_argument("unknown equalizer mode: " + name);
}

const FilterResponse* PipelineContext::response_for(Pipeline p) const {
    switch (p) {
        case Pipeline::None: return nullptr;
        case Pipeline::Existing: return &existing;
        default: return &proposed;
    }
}

const std::vector<cplx>* PipelineContext::comp_for(Pipeline p) const {
    if (equalizer == Equalizer::None) return nullptr;
    switch (p) {
        case Pipeline::None: return nullptr;
        case Pipeline::Existing: return existing_comp.empty() ? nullptr : &existing_comp;
        default: return proposed_comp.empty() ? nullptr : &proposed_comp;
    }
}

void PipelineContext::validate() const {
    cfg.validate();
    const double cycles = cfg.carrier_hz * static_cast<double>(cfg.oversampled_len()) / cfg.sample_rate_hz();
    if (std::abs(cycles - std::round(cycles)) > 1e-9) {
        throw std::invalid_argument(
            "pipeline: carrier must be an integer multiple of the subcarrier spacing");
    }
}

std::vector<std::uint8_t> block_bits(const OfdmConfig& cfg, std::uint64_t seed,
                                     std::uint64_t block_index) {
    std::vector<std::uint8_t> bits(cfg.bits_per_block());
    BlockRng rng(seed, block_index);
    rng.fill_bits(bits);
    return bits;
}

namespace {

// The prefix of the filtered symbol is rebuilt from the filtered core's
// tail; for an on-grid carrier the clipped passband block is cyclic, so
// this equals filtering the whole prefix-extended signal circularly.
ComplexSignal filter_with_prefix(const ComplexSignal& passband, const FilterResponse& response,
                                 std::size_t cp_os) {
    ComplexSignal core;
    core.rate_hz = passband.rate_hz;
    core.domain = passband.domain;
    core.samples.assign(passband.samples.begin() + static_cast<std::ptrdiff_t>(cp_os),
                        passband.samples.end());
    ComplexSignal filtered = composed_filter(core, response);
    if (cp_os == 0) return filtered;
    return add_cyclic_prefix(filtered, cp_os);
}

} // namespace

TxBlock transmit_block(const PipelineContext& ctx, Pipeline pipeline, double cr,
                       std::uint64_t seed, std::uint64_t block_index) {
    const OfdmConfig& cfg = ctx.cfg;
    TxBlock out;
    out.bits = block_bits(cfg, seed, block_index);
    const std::vector<cplx> symbols = map_bits(out.bits, cfg.modulation);
    const std::vector<cplx> spectrum = zero_pad_center(symbols, cfg.oversampling);
    ComplexSignal x = ifft_oversampled(spectrum, cfg.sample_rate_hz());
    x = add_cyclic_prefix(x, cfg.cp_oversampled());
    ComplexSignal p = upconvert(x, cfg.carrier_hz);

    if (pipeline == Pipeline::None) {
        out.transmitted = std::move(p);
        return out;
    }

    ClippingSpec clip_spec{.cr = cr, .sigma_mode = ctx.sigma_mode, .ensemble_rms = ctx.ensemble_rms};
    ClipResult clipped = clip_by_cr(p, clip_spec);
    out.clip_amplitude = clipped.amplitude;
    out.transmitted =
        filter_with_prefix(clipped.signal, *ctx.response_for(pipeline), cfg.cp_oversampled());
    return out;
}

std::vector<cplx> data_bin_gains(const OfdmConfig& cfg, const FilterResponse& response) {
    const std::size_t n = cfg.n;
    const std::size_t nl = cfg.oversampled_len();
    const auto carrier_bin = static_cast<std::int64_t>(
        std::llround(cfg.carrier_hz / cfg.sample_rate_hz() * static_cast<double>(nl)));
    std::vector<cplx> gains(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t signed_k =
            k <= n / 2 ? static_cast<std::int64_t>(k)
                       : static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n);
        const std::int64_t bin =
            (carrier_bin + signed_k + static_cast<std::int64_t>(nl)) % static_cast<std::int64_t>(nl);
        gains[k] = response.h[static_cast<std::size_t>(bin)];
    }
    return gains;
}

std::vector<std::uint8_t> receive_block(const PipelineContext& ctx, Pipeline pipeline,
                                        const ComplexSignal& passband) {
    const OfdmConfig& cfg = ctx.cfg;
    const std::size_t cp_os = cfg.cp_oversampled();
    const std::size_t nl = cfg.oversampled_len();
    if (passband.size() != nl + cp_os) {
        throw std::invalid_argument("receive_block: unexpected signal length");
    }

    // mix the prefix-stripped core down with the phase-true carrier and go
    // straight to the bin grid; the brick-wall low-pass only zeroes bins the
    // extraction never reads, so it is omitted here (downconvert() keeps it
    // for signal-level use)
    std::vector<cplx> mixed(nl);
    const double w = 2.0 * std::numbers::pi * cfg.carrier_hz / cfg.sample_rate_hz();
    for (std::size_t m = 0; m < nl; ++m) {
        const double ang = -w * static_cast<double>(m + cp_os);
        mixed[m] = std::numbers::sqrt2 * passband.samples[m + cp_os] * cplx{std::cos(ang), std::sin(ang)};
    }
    std::vector<cplx> spectrum = fft_unitary(mixed);
    std::vector<cplx> data = extract_subcarriers(spectrum, cfg.n);

    if (const std::vector<cplx>* comp = ctx.comp_for(pipeline)) {
        for (std::size_t k = 0; k < data.size(); ++k) data[k] /= (*comp)[k];
    }
    return demap_symbols(data, cfg.modulation);
}

} // namespace acfofdm
