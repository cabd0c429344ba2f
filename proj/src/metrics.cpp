#include "acfofdm/metrics.hpp"

#include "parallel.hpp"
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace acfofdm {

PaprNorm papr_norm_from_string(const std::string& name) {
    if (name == "power") return PaprNorm::Power;
    if (name == "amplitude") return PaprNorm::Amplitude;
    throw std::invalid_argument("unknown papr norm: " + name);
}

double papr_db_normalized(std::span<const cplx> samples, PaprNorm norm) {
    if (samples.empty()) throw std::invalid_argument("papr: empty signal");
    double peak = 0.0;
    double power_sum = 0.0;
    double amp_sum = 0.0;
    for (const cplx& v : samples) {
        const double p = std::norm(v);
        peak = std::max(peak, p);
        power_sum += p;
        amp_sum += std::sqrt(p);
    }
    if (power_sum == 0.0) throw std::domain_error("papr: undefined for an all-zero signal");
    const double m = static_cast<double>(samples.size());
    const double denom = norm == PaprNorm::Power ? power_sum / m : (amp_sum / m) * (amp_sum / m);
    return 10.0 * std::log10(peak / denom);
}

CcdfCurve::CcdfCurve(std::vector<double> samples_db) : samples_(std::move(samples_db)) {
    if (samples_.empty()) throw std::invalid_argument("CcdfCurve: no samples");
    std::sort(samples_.begin(), samples_.end());
}

double CcdfCurve::ccdf(double gamma_db) const {
    const auto above = samples_.end() - std::upper_bound(samples_.begin(), samples_.end(), gamma_db);
    return static_cast<double>(above) / static_cast<double>(samples_.size());
}

double CcdfCurve::papr_at_ccdf(double level, bool* under_resolved) const {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::invalid_argument("papr_at_ccdf: level must lie in (0, 1)");
    }
    const double m = static_cast<double>(samples_.size());
    if (under_resolved) *under_resolved = m * level < 10.0;
    // exceedance counts are non-increasing along the sorted samples, so the
    // first index whose strict-exceedance count drops to <= level*M wins
    const double budget = level * m;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto above =
            samples_.end() - std::upper_bound(samples_.begin() + static_cast<std::ptrdiff_t>(i),
                                              samples_.end(), samples_[i]);
        if (static_cast<double>(above) <= budget) return samples_[i];
    }
    return samples_.back();
}

void CcdfCurve::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << "papr_db,ccdf_probability\n";
    char buf[96];
    const double m = static_cast<double>(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (i + 1 < samples_.size() && samples_[i + 1] == samples_[i]) continue;
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", samples_[i],
                      static_cast<double>(samples_.size() - i - 1) / m);
        out << buf;
    }
}

CcdfCurve collect_papr(const PipelineContext& ctx, Pipeline pipeline, double cr,
                       std::uint64_t trials, std::uint64_t seed, PaprNorm norm, unsigned workers) {
    if (trials < 1) throw std::invalid_argument("collect_papr: trials must be >= 1");
    std::vector<double> samples(trials);
    detail::parallel_indexed(trials, workers, [&](std::uint64_t block) {
        const TxBlock tx = transmit_block(ctx, pipeline, cr, seed, block);
        samples[block] = papr_db_normalized(tx.transmitted.samples, norm);
    });
    return CcdfCurve(std::move(samples));
}

} // namespace acfofdm
