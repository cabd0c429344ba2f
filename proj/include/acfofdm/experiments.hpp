#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acfofdm/metrics.hpp"

namespace acfofdm {

// Flat key = value experiment configuration. Defaults mirror the standard
// simulation parameter set (N=128, L=8, BW=1 MHz, f_c=2 MHz, CP=32,
// CR 0.8..1.6) so a run with no config file reproduces the reference setup.
struct ExperimentConfig {
    OfdmConfig ofdm;                 // modulation field ignored; see run_qpsk/run_qam16
    bool run_qpsk = true;
    bool run_qam16 = true;
    std::vector<double> cr_list = {0.8, 1.0, 1.2, 1.4, 1.6};
    double ebn0_start_db = 0.0;
    double ebn0_stop_db = 10.0;
    double ebn0_step_db = 1.0;
    std::uint64_t trials = 10000;
    std::uint64_t target_bit_errors = 200;
    std::uint64_t max_bits = 2'000'000;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    double ccdf_level = 0.1;
    PaprNorm papr_norm = PaprNorm::Amplitude;
    SigmaMode sigma_mode = SigmaMode::PerSymbol;
    std::string existing_filter = "mask";  // mask | fir
    std::size_t fir_taps = 127;
    ChebyshevSpec cheby{};                 // defaults set in ctor below
    Equalizer equalizer = Equalizer::None;
    unsigned workers = 0;                  // 0 = hardware concurrency

    ExperimentConfig();

    static ExperimentConfig load(const std::string& path);
    void set(const std::string& key, const std::string& value);
    void validate() const;

    std::vector<double> ebn0_sweep() const;
    std::vector<Modulation> modulations() const;
    // Designs both pipeline filters for the given modulation.
    PipelineContext context(Modulation mod) const;
};

struct CcdfSeries {
    Modulation mod = Modulation::Qpsk;
    Pipeline pipeline = Pipeline::None;
    double cr = 0.0;  // 0 marks the unclipped reference
    CcdfCurve curve;
    double papr_at_level_db = 0.0;
};

struct CcdfExperimentResult {
    std::vector<CcdfSeries> series;

    const CcdfSeries* find(Modulation mod, Pipeline p, double cr) const;
};

struct BerPoint {
    double ebn0_db = 0.0;
    BerSample sample;
    double analytical = 0.0;
};

struct BerSeries {
    Modulation mod = Modulation::Qpsk;
    Pipeline pipeline = Pipeline::None;
    double cr = 0.0;
    std::vector<BerPoint> points;
};

struct BerExperimentResult {
    std::vector<BerSeries> series;

    const BerSeries* find(Modulation mod, Pipeline p, double cr) const;
};

// One row of the comparison tables, keyed by (modulation, CR). The
// improvement and difference columns are exact arithmetic on their source
// columns.
struct ResultRow {
    Modulation mod = Modulation::Qpsk;
    double cr = 0.0;
    double papr_existing_db = 0.0;
    double papr_proposed_db = 0.0;
    double improvement_db = 0.0;
    double ber_existing = 0.0;
    double ber_proposed = 0.0;
    double ber_difference = 0.0;  // existing - proposed
};

// Runs one BER point with the configured stopping rule (>= target errors or
// >= max bits, evaluated on fixed 256-block chunks so the block count does
// not depend on worker count).
BerSample measure_ber_point(const PipelineContext& ctx, Pipeline pipeline, double cr,
                            double ebn0_db, std::uint64_t seed, std::uint64_t target_errors,
                            std::uint64_t max_bits, unsigned workers);

// CCDF experiment: per modulation one unclipped curve plus one curve per
// (pipeline, CR); writes ccdf_<mod>_<pipeline>.csv, ccdf_summary_<mod>.csv
// and the CCDF plot scripts (fig5.gp for QPSK, fig6.gp for 16-QAM).
CcdfExperimentResult run_ccdf_experiment(const ExperimentConfig& cfg);

// BER experiment over the Eb/N0 sweep: unclipped series plus one series per
// (pipeline, CR); writes ber_<mod>_<pipeline>.csv and fig7.gp / fig8.gp.
BerExperimentResult run_ber_experiment(const ExperimentConfig& cfg);

// Runs both experiments and emits the comparison tables: table2.csv /
// table3.csv hold the PAPR columns (QPSK / 16-QAM), table4.csv / table5.csv
// the BER columns at the 6 dB point. Returns the assembled rows.
std::vector<ResultRow> run_tables(const ExperimentConfig& cfg);

// Writes the proposed filter's second-order sections (chebyshev_sos.txt,
// one "b0 b1 b2 a0 a1 a2" line per section) and its bin-grid response
// (chebyshev_response.csv) into the output directory.
void design_filter_dump(const ExperimentConfig& cfg);

enum class PlotKind { Ccdf, Ber };

// Standalone gnuplot script referencing the emitted CSVs; log-scale y axis
// for both kinds. Throws when the result holds no series for mod.
void emit_plot_script(const CcdfExperimentResult& result, Modulation mod,
                      const ExperimentConfig& cfg, const std::string& path);
void emit_plot_script(const BerExperimentResult& result, Modulation mod,
                      const ExperimentConfig& cfg, const std::string& path);

} // namespace acfofdm
