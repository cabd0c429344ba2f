#pragma once

#include <cstdint>

#include "acfofdm/pipeline.hpp"

namespace acfofdm {

// Which average-power estimate normalizes the PAPR readout.
//   Power:     10*log10(max|x|^2 / mean(|x|^2))   (the papr_db operation)
//   Amplitude: 10*log10(max|x|^2 / (mean|x|)^2)
// The amplitude form is what the reference CCDF figures for this system
// use; for a Gaussian real waveform it reads 10*log10(pi/2) = 1.96 dB above
// the power form.
enum class PaprNorm { Power, Amplitude };

PaprNorm papr_norm_from_string(const std::string& name);

double papr_db_normalized(std::span<const cplx> samples, PaprNorm norm);

// Empirical PAPR distribution; evaluation ccdf(g) = (#samples > g) / M.
class CcdfCurve {
public:
    CcdfCurve() = default;
    explicit CcdfCurve(std::vector<double> samples_db);

    double ccdf(double gamma_db) const;

    // Smallest sample value whose exceedance probability drops to <= level
    // (a conservative order-statistic quantile). level must lie in (0, 1);
    // when M * level < 10 the readout is under-resolved and the optional
    // flag is set.
    double papr_at_ccdf(double level, bool* under_resolved = nullptr) const;

    // Two-column CSV (papr_db, ccdf) of the empirical step function.
    void write_csv(const std::string& path) const;

    const std::vector<double>& sorted_samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

private:
    std::vector<double> samples_;  // ascending
};

// Monte Carlo PAPR collection: one random block per trial through the
// selected pipeline, measured on the transmitted passband symbol (prefix
// included). Deterministic given the seed and independent of worker count.
CcdfCurve collect_papr(const PipelineContext& ctx, Pipeline pipeline, double cr,
                       std::uint64_t trials, std::uint64_t seed,
                       PaprNorm norm = PaprNorm::Power, unsigned workers = 0);

} // namespace acfofdm
