#pragma once

#include <cstdint>
#include <optional>

#include "acfofdm/channel.hpp"
#include "acfofdm/clip_filter.hpp"
#include "acfofdm/signal.hpp"

namespace acfofdm {

enum class Pipeline { None, Existing, Proposed };

Pipeline pipeline_from_string(const std::string& name);
const char* pipeline_name(Pipeline p);

// Optional receive-side compensation of the known transmit filter.
//   None:  plain receiver, filter distortion lands on the constellation.
//   Delay: one tap at the carrier plus group-delay phase ramp.
//   Zf:    per-subcarrier division by the exact filter response.
enum class Equalizer { None, Delay, Zf };

Equalizer equalizer_from_string(const std::string& name);

// Everything a transmit/receive chain needs beyond the block payload. The
// filter responses are designed once and shared read-only by all workers.
struct PipelineContext {
    OfdmConfig cfg;
    FilterResponse existing;
    FilterResponse proposed;
    SigmaMode sigma_mode = SigmaMode::PerSymbol;
    double ensemble_rms = 0.0;
    Equalizer equalizer = Equalizer::None;

    // per-subcarrier compensation terms, unity when equalizer == None
    std::vector<cplx> existing_comp;
    std::vector<cplx> proposed_comp;

    const FilterResponse* response_for(Pipeline p) const;
    const std::vector<cplx>* comp_for(Pipeline p) const;

    // Requires the carrier to sit on the block's subcarrier grid so the
    // cyclic prefix stays a cyclic extension at passband.
    void validate() const;
};

struct TxBlock {
    std::vector<std::uint8_t> bits;
    ComplexSignal transmitted;  // passband, prefix included
    double clip_amplitude = 0.0;
};

std::vector<std::uint8_t> block_bits(const OfdmConfig& cfg, std::uint64_t seed,
                                     std::uint64_t block_index);

// map -> zero pad -> oversampled IFFT -> cyclic prefix -> upconvert, then
// for clipping pipelines: clip at cr*sigma and run the composed filter over
// the prefix-stripped core. The prefix is re-extended from the filtered
// core, which matches the filter's circular-convolution semantics.
TxBlock transmit_block(const PipelineContext& ctx, Pipeline pipeline, double cr,
                       std::uint64_t seed, std::uint64_t block_index);

// prefix removal -> carrier-phase-true downconversion -> FFT -> optional
// compensation -> hard demap.
std::vector<std::uint8_t> receive_block(const PipelineContext& ctx, Pipeline pipeline,
                                        const ComplexSignal& passband);

// Filter responses sampled at the data subcarriers' passband bins, in
// subcarrier extraction order. Used by the Delay/Zf equalizer modes.
std::vector<cplx> data_bin_gains(const OfdmConfig& cfg, const FilterResponse& response);

} // namespace acfofdm
