#include "acfofdm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "acfofdm/modem.hpp"
#include "acfofdm/ofdm.hpp"
#include "parallel.hpp"

namespace acfofdm {

namespace fs = std::filesystem;

namespace {

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path p(dir.empty() ? "." : dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec && !fs::is_directory(p)) {
        throw std::runtime_error("output directory is not writable: " + p.string() + " (" +
                                 ec.message() + ")");
    }
    return p;
}

// data bits ride substream 2*block, the channel noise substream 2*block+1
constexpr std::uint64_t bit_stream(std::uint64_t block) { return 2 * block; }
constexpr std::uint64_t noise_stream(std::uint64_t block) { return 2 * block + 1; }

} // namespace

ExperimentConfig::ExperimentConfig() {
    cheby.order = 1;
    cheby.ripple_db = 2.0;
    cheby.f_low_hz = 1.0e6;
    cheby.f_high_hz = 3.0e6;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    if (key == "n") {
        ofdm.n = std::stoul(value);
    } else if (key == "oversampling") {
        ofdm.oversampling = std::stoul(value);
    } else if (key == "bandwidth_hz") {
        ofdm.bandwidth_hz = std::stod(value);
    } else if (key == "carrier_hz") {
        ofdm.carrier_hz = std::stod(value);
    } else if (key == "cp_len") {
        ofdm.cp_len = std::stoul(value);
    } else if (key == "modulation") {
        if (value == "both") {
            run_qpsk = run_qam16 = true;
        } else {
            const Modulation m = modulation_from_string(value);
            run_qpsk = m == Modulation::Qpsk;
            run_qam16 = m == Modulation::Qam16;
        }
    } else if (key == "cr_list") {
        cr_list = parse_double_list(value);
    } else if (key == "ebn0_start_db") {
        ebn0_start_db = std::stod(value);
    } else if (key == "ebn0_stop_db") {
        ebn0_stop_db = std::stod(value);
    } else if (key == "ebn0_step_db") {
        ebn0_step_db = std::stod(value);
    } else if (key == "trials") {
        trials = std::stoull(value);
    } else if (key == "target_bit_errors") {
        target_bit_errors = std::stoull(value);
    } else if (key == "max_bits") {
        max_bits = std::stoull(value);
    } else if (key == "seed") {
        seed = std::stoull(value);
    } else if (key == "out_dir") {
        out_dir = value;
    } else if (key == "ccdf_level") {
        ccdf_level = std::stod(value);
    } else if (key == "papr_norm") {
        papr_norm = papr_norm_from_string(value);
    } else if (key == "sigma_mode") {
        if (value == "per_symbol") {
            sigma_mode = SigmaMode::PerSymbol;
        } else if (value == "ensemble") {
            sigma_mode = SigmaMode::Ensemble;
        } else {
            throw std::invalid_argument("sigma_mode must be per_symbol or ensemble");
        }
    } else if (key == "existing_filter") {
        if (value != "mask" && value != "fir") {
            throw std::invalid_argument("existing_filter must be mask or fir");
        }
        existing_filter = value;
    } else if (key == "fir_taps") {
        fir_taps = std::stoul(value);
    } else if (key == "cheby_order") {
        cheby.order = static_cast<unsigned>(std::stoul(value));
    } else if (key == "cheby_ripple_db") {
        cheby.ripple_db = std::stod(value);
    } else if (key == "cheby_f_low_hz") {
        cheby.f_low_hz = std::stod(value);
    } else if (key == "cheby_f_high_hz") {
        cheby.f_high_hz = std::stod(value);
    } else if (key == "equalizer") {
        equalizer = equalizer_from_string(value);
    } else if (key == "workers") {
        workers = static_cast<unsigned>(std::stoul(value));
    } else {
        throw std::invalid_argument("unknown config key: " + key);
    }
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        try {
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

void ExperimentConfig::validate() const {
    OfdmConfig probe = ofdm;
    probe.modulation = Modulation::Qpsk;
    probe.validate();
    if (cr_list.empty()) throw std::invalid_argument("config: cr_list must not be empty");
    for (double cr : cr_list) {
        if (cr <= 0.0) throw std::invalid_argument("config: clipping ratios must be positive");
    }
    if (ebn0_step_db <= 0.0) throw std::invalid_argument("config: ebn0_step_db must be positive");
    if (ebn0_stop_db < ebn0_start_db) throw std::invalid_argument("config: empty Eb/N0 sweep");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (!(ccdf_level > 0.0 && ccdf_level < 1.0)) {
        throw std::invalid_argument("config: ccdf_level must lie in (0, 1)");
    }
    if (!run_qpsk && !run_qam16) throw std::invalid_argument("config: no modulation selected");
}

std::vector<double> ExperimentConfig::ebn0_sweep() const {
    std::vector<double> out;
    for (double v = ebn0_start_db; v <= ebn0_stop_db + 1e-9; v += ebn0_step_db) out.push_back(v);
    return out;
}

std::vector<Modulation> ExperimentConfig::modulations() const {
    std::vector<Modulation> out;
    if (run_qpsk) out.push_back(Modulation::Qpsk);
    if (run_qam16) out.push_back(Modulation::Qam16);
    return out;
}

PipelineContext ExperimentConfig::context(Modulation mod) const {
    PipelineContext ctx;
    ctx.cfg = ofdm;
    ctx.cfg.modulation = mod;
    ctx.sigma_mode = sigma_mode;
    const std::size_t nl = ctx.cfg.oversampled_len();
    const double fs = ctx.cfg.sample_rate_hz();
    const double f_low = ctx.cfg.carrier_hz - ctx.cfg.bandwidth_hz / 2.0;
    const double f_high = ctx.cfg.carrier_hz + ctx.cfg.bandwidth_hz / 2.0;
    ctx.existing = existing_filter == "fir" ? fir_bandpass_response(fir_taps, f_low, f_high, nl, fs)
                                            : ideal_mask_response(f_low, f_high, nl, fs);
    ctx.proposed = design_chebyshev1_bandpass(cheby, fs).response_grid(nl);
    ctx.equalizer = equalizer;
    if (sigma_mode == SigmaMode::Ensemble) {
        // unit-power constellation through unitary transforms and the
        // power-preserving up-conversion: E|p|^2 = 1/L
        ctx.ensemble_rms = std::sqrt(1.0 / static_cast<double>(ctx.cfg.oversampling));
    }

    if (equalizer != Equalizer::None) {
        const auto build = [&](const FilterResponse& r) -> std::vector<cplx> {
            std::vector<cplx> gains = data_bin_gains(ctx.cfg, r);
            if (equalizer == Equalizer::Zf) return gains;
            // Delay mode: one tap at the carrier plus the group-delay phase
            // ramp, estimated from the response phase around the carrier bin.
            const auto nl_i = static_cast<std::int64_t>(nl);
            const auto k0 = static_cast<std::int64_t>(
                std::llround(ctx.cfg.carrier_hz / fs * static_cast<double>(nl)));
            const cplx hc = r.h[static_cast<std::size_t>(k0)];
            const cplx hl = r.h[static_cast<std::size_t>((k0 - 1 + nl_i) % nl_i)];
            const cplx hr = r.h[static_cast<std::size_t>((k0 + 1) % nl_i)];
            const double dphi = std::arg(hr / hl) / 2.0;  // radians per bin
            std::vector<cplx> comp(ctx.cfg.n);
            for (std::size_t k = 0; k < ctx.cfg.n; ++k) {
                const double signed_k =
                    k <= ctx.cfg.n / 2 ? static_cast<double>(k)
                                       : static_cast<double>(k) - static_cast<double>(ctx.cfg.n);
                comp[k] = hc * std::polar(1.0, dphi * signed_k);
            }
            return comp;
        };
        ctx.existing_comp = build(ctx.existing);
        ctx.proposed_comp = build(ctx.proposed);
    }
    ctx.validate();
    return ctx;
}

const CcdfSeries* CcdfExperimentResult::find(Modulation mod, Pipeline p, double cr) const {
    for (const auto& s : series) {
        if (s.mod == mod && s.pipeline == p && std::abs(s.cr - cr) < 1e-12) return &s;
    }
    return nullptr;
}

const BerSeries* BerExperimentResult::find(Modulation mod, Pipeline p, double cr) const {
    for (const auto& s : series) {
        if (s.mod == mod && s.pipeline == p && std::abs(s.cr - cr) < 1e-12) return &s;
    }
    return nullptr;
}

BerSample measure_ber_point(const PipelineContext& ctx, Pipeline pipeline, double cr,
                            double ebn0_db, std::uint64_t seed, std::uint64_t target_errors,
                            std::uint64_t max_bits, unsigned workers) {
    const std::uint64_t bits_per_block = ctx.cfg.bits_per_block();
    const std::uint64_t max_blocks = std::max<std::uint64_t>(1, (max_bits + bits_per_block - 1) / bits_per_block);
    constexpr std::uint64_t kChunk = 256;  // stopping granularity, worker independent

    BerSample total;
    total.ebn0_db = ebn0_db;
    std::uint64_t done = 0;
    std::vector<std::uint64_t> errs(kChunk);
    while (done < max_blocks && total.bit_errors < target_errors) {
        const std::uint64_t count = std::min(kChunk, max_blocks - done);
        detail::parallel_indexed(count, workers, [&](std::uint64_t i) {
            const std::uint64_t block = done + i;
            const TxBlock tx = transmit_block(ctx, pipeline, cr, seed, bit_stream(block));
            const AwgnSpec awgn{.ebn0_db = ebn0_db, .seed = seed, .block_index = noise_stream(block)};
            const ComplexSignal received = add_awgn(tx.transmitted, awgn, ctx.cfg);
            const std::vector<std::uint8_t> decoded = receive_block(ctx, pipeline, received);
            std::uint64_t e = 0;
            for (std::size_t b = 0; b < decoded.size(); ++b) e += (decoded[b] ^ tx.bits[b]) & 1u;
            errs[i] = e;
        });
        for (std::uint64_t i = 0; i < count; ++i) total.bit_errors += errs[i];
        done += count;
        total.bits_sent = done * bits_per_block;
    }
    return total;
}

namespace {

void write_ccdf_csv(const fs::path& dir, Modulation mod, Pipeline pipeline,
                    const std::vector<const CcdfSeries*>& series) {
    const std::string name =
        std::string("ccdf_") + modulation_name(mod) + "_" + pipeline_name(pipeline) + ".csv";
    auto out = open_output(dir / name);
    out << "cr,papr_db,ccdf_probability\n";
    for (const CcdfSeries* s : series) {
        const auto& samples = s->curve.sorted_samples();
        const double m = static_cast<double>(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;  // step corner only
            out << fmt_full(s->cr) << ',' << fmt_full(samples[i]) << ','
                << fmt_full(static_cast<double>(samples.size() - i - 1) / m) << '\n';
        }
    }
}

void write_ccdf_summary(const fs::path& dir, Modulation mod, double level,
                        const std::vector<const CcdfSeries*>& series) {
    auto out = open_output(dir / (std::string("ccdf_summary_") + modulation_name(mod) + ".csv"));
    out << "pipeline,cr,ccdf_level,papr_db\n";
    for (const CcdfSeries* s : series) {
        out << pipeline_name(s->pipeline) << ',' << fmt_full(s->cr) << ',' << fmt_full(level) << ','
            << fmt_full(s->papr_at_level_db) << '\n';
    }
}

std::string gp_ccdf_plot_cmd(const std::string& csv, const std::vector<double>& crs,
                             const std::string& unclipped_csv) {
    std::ostringstream cmd;
    cmd << "plot '" << unclipped_csv << "' skip 1 using 2:3 with lines lw 2 lc 'black' title 'unclipped'";
    int style = 1;
    for (double cr : crs) {
        cmd << ", \\\n     '" << csv << "' skip 1 using 2:($1==" << fmt_full(cr)
            << "?$3:1/0) with lines lc " << style++ << " title 'CR " << fmt2(cr) << "'";
    }
    return cmd.str();
}

} // namespace

CcdfExperimentResult run_ccdf_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const fs::path dir = prepare_out_dir(cfg.out_dir);
    CcdfExperimentResult result;
    result.series.reserve(cfg.modulations().size() * (1 + 2 * cfg.cr_list.size()));

    for (Modulation mod : cfg.modulations()) {
        const PipelineContext ctx = cfg.context(mod);
        const auto run_one = [&](Pipeline p, double cr) {
            CcdfSeries s;
            s.mod = mod;
            s.pipeline = p;
            s.cr = cr;
            s.curve = collect_papr(ctx, p, cr, cfg.trials, cfg.seed, cfg.papr_norm, cfg.workers);
            s.papr_at_level_db = s.curve.papr_at_ccdf(cfg.ccdf_level);
            result.series.push_back(std::move(s));
        };
        run_one(Pipeline::None, 0.0);
        for (Pipeline p : {Pipeline::Existing, Pipeline::Proposed}) {
            for (double cr : cfg.cr_list) run_one(p, cr);
        }

        std::vector<const CcdfSeries*> all;
        for (const auto& s : result.series) {
            if (s.mod == mod) all.push_back(&s);
        }
        for (Pipeline p : {Pipeline::None, Pipeline::Existing, Pipeline::Proposed}) {
            std::vector<const CcdfSeries*> group;
            for (const auto* s : all) {
                if (s->pipeline == p) group.push_back(s);
            }
            write_ccdf_csv(dir, mod, p, group);
        }
        write_ccdf_summary(dir, mod, cfg.ccdf_level, all);
        emit_plot_script(result, mod,
                         cfg, (dir / (mod == Modulation::Qpsk ? "fig5.gp" : "fig6.gp")).string());
    }
    return result;
}

BerExperimentResult run_ber_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const fs::path dir = prepare_out_dir(cfg.out_dir);
    const std::vector<double> sweep = cfg.ebn0_sweep();
    BerExperimentResult result;
    result.series.reserve(cfg.modulations().size() * (1 + 2 * cfg.cr_list.size()));

    for (Modulation mod : cfg.modulations()) {
        const PipelineContext ctx = cfg.context(mod);
        const auto run_series = [&](Pipeline p, double cr) {
            BerSeries s;
            s.mod = mod;
            s.pipeline = p;
            s.cr = cr;
            for (double ebn0 : sweep) {
                BerPoint pt;
                pt.ebn0_db = ebn0;
                pt.sample = measure_ber_point(ctx, p, cr, ebn0, cfg.seed, cfg.target_bit_errors,
                                              cfg.max_bits, cfg.workers);
                pt.analytical = analytical_ber(mod, ebn0);
                s.points.push_back(pt);
            }
            result.series.push_back(std::move(s));
        };
        run_series(Pipeline::None, 0.0);
        for (Pipeline p : {Pipeline::Existing, Pipeline::Proposed}) {
            for (double cr : cfg.cr_list) run_series(p, cr);
        }

        for (Pipeline p : {Pipeline::None, Pipeline::Existing, Pipeline::Proposed}) {
            const std::string name =
                std::string("ber_") + modulation_name(mod) + "_" + pipeline_name(p) + ".csv";
            auto out = open_output(dir / name);
            out << "cr,ebn0_db,ber,bit_errors,bits_sent,ber_analytical_reference\n";
            for (const auto& s : result.series) {
                if (s.mod != mod || s.pipeline != p) continue;
                for (const auto& pt : s.points) {
                    out << fmt_full(s.cr) << ',' << fmt_full(pt.ebn0_db) << ','
                        << fmt_full(pt.sample.ber()) << ',' << pt.sample.bit_errors << ','
                        << pt.sample.bits_sent << ',' << fmt_full(pt.analytical) << '\n';
                }
            }
        }
        emit_plot_script(result, mod,
                         cfg, (dir / (mod == Modulation::Qpsk ? "fig7.gp" : "fig8.gp")).string());
    }
    return result;
}

std::vector<ResultRow> run_tables(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<double> sweep = cfg.ebn0_sweep();
    const bool has_6db = std::any_of(sweep.begin(), sweep.end(),
                                     [](double v) { return std::abs(v - 6.0) < 1e-9; });
    if (!has_6db) {
        throw std::invalid_argument("tables: the Eb/N0 sweep must include the 6 dB point");
    }

    const CcdfExperimentResult ccdf = run_ccdf_experiment(cfg);
    const BerExperimentResult ber = run_ber_experiment(cfg);
    const fs::path dir = prepare_out_dir(cfg.out_dir);

    std::vector<ResultRow> rows;
    for (Modulation mod : cfg.modulations()) {
        for (double cr : cfg.cr_list) {
            ResultRow row;
            row.mod = mod;
            row.cr = cr;
            row.papr_existing_db = ccdf.find(mod, Pipeline::Existing, cr)->papr_at_level_db;
            row.papr_proposed_db = ccdf.find(mod, Pipeline::Proposed, cr)->papr_at_level_db;
            row.improvement_db = row.papr_existing_db - row.papr_proposed_db;
            const auto at6 = [&](Pipeline p) {
                const BerSeries* s = ber.find(mod, p, cr);
                for (const auto& pt : s->points) {
                    if (std::abs(pt.ebn0_db - 6.0) < 1e-9) return pt.sample.ber();
                }
                return 0.0;
            };
            row.ber_existing = at6(Pipeline::Existing);
            row.ber_proposed = at6(Pipeline::Proposed);
            row.ber_difference = row.ber_existing - row.ber_proposed;
            rows.push_back(row);
        }
    }

    const auto write_papr_table = [&](Modulation mod, const std::string& name) {
        auto out = open_output(dir / name);
        out << "modulation,cr,papr_existing_db,papr_proposed_db,improvement_db\n";
        for (const auto& r : rows) {
            if (r.mod != mod) continue;
            out << modulation_name(r.mod) << ',' << fmt_full(r.cr) << ','
                << fmt_full(r.papr_existing_db) << ',' << fmt_full(r.papr_proposed_db) << ','
                << fmt_full(r.improvement_db) << '\n';
        }
    };
    const auto write_ber_table = [&](Modulation mod, const std::string& name) {
        auto out = open_output(dir / name);
        out << "modulation,cr,ber_existing,ber_proposed,ber_difference\n";
        for (const auto& r : rows) {
            if (r.mod != mod) continue;
            out << modulation_name(r.mod) << ',' << fmt_full(r.cr) << ',' << fmt_full(r.ber_existing)
                << ',' << fmt_full(r.ber_proposed) << ',' << fmt_full(r.ber_difference) << '\n';
        }
    };
    if (cfg.run_qpsk) {
        write_papr_table(Modulation::Qpsk, "table2.csv");
        write_ber_table(Modulation::Qpsk, "table4.csv");
    }
    if (cfg.run_qam16) {
        write_papr_table(Modulation::Qam16, "table3.csv");
        write_ber_table(Modulation::Qam16, "table5.csv");
    }

    // human summary, dB rounded to two decimals
    std::printf("%-7s %-4s | %-14s %-14s %-11s | %-12s %-12s %-12s\n", "mod", "CR", "PAPR existing",
                "PAPR proposed", "improve dB", "BER existing", "BER proposed", "difference");
    for (const auto& r : rows) {
        std::printf("%-7s %-4s | %14s %14s %11s | %12.5f %12.5f %+12.5f\n", modulation_name(r.mod),
                    fmt2(r.cr).c_str(), fmt2(r.papr_existing_db).c_str(),
                    fmt2(r.papr_proposed_db).c_str(), fmt2(r.improvement_db).c_str(), r.ber_existing,
                    r.ber_proposed, r.ber_difference);
    }
    return rows;
}

void design_filter_dump(const ExperimentConfig& cfg) {
    cfg.validate();
    const fs::path dir = prepare_out_dir(cfg.out_dir);
    const double fs_hz = cfg.ofdm.sample_rate_hz();
    const ChebyshevDesign design = design_chebyshev1_bandpass(cfg.cheby, fs_hz);

    auto sos = open_output(dir / "chebyshev_sos.txt");
    sos << design.sos_text();

    const std::size_t nl = cfg.ofdm.oversampled_len();
    const FilterResponse grid = design.response_grid(nl);
    auto out = open_output(dir / "chebyshev_response.csv");
    out << "frequency_hz,gain_real,gain_imag,magnitude_db\n";
    for (std::size_t k = 0; k < nl; ++k) {
        const double f = fs_hz * static_cast<double>(k) / static_cast<double>(nl);
        const double mag = std::abs(grid.h[k]);
        out << fmt_full(f) << ',' << fmt_full(grid.h[k].real()) << ',' << fmt_full(grid.h[k].imag())
            << ',' << fmt_full(20.0 * std::log10(std::max(mag, 1e-300))) << '\n';
    }
}

void emit_plot_script(const CcdfExperimentResult& result, Modulation mod,
                      const ExperimentConfig& cfg, const std::string& path) {
    std::vector<double> crs;
    bool any = false;
    for (const auto& s : result.series) {
        if (s.mod != mod) continue;
        any = true;
        if (s.pipeline == Pipeline::Existing) crs.push_back(s.cr);
    }
    if (!any) throw std::invalid_argument("emit_plot_script: no CCDF series for this modulation");

    const std::string m = modulation_name(mod);
    auto out = open_output(path);
    out << "# CCDF of PAPR, " << m << "\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 1200,520\n"
        << "set output '" << fs::path(path).stem().string() << ".png'\n"
        << "set multiplot layout 1,2\n"
        << "set logscale y\n"
        << "set xlabel 'PAPR_0 (dB)'\n"
        << "set ylabel 'CCDF  Pr[PAPR > PAPR_0]'\n"
        << "set yrange [" << fmt_full(1.0 / static_cast<double>(cfg.trials)) << ":1]\n"
        << "set key bottom left\n"
        << "set grid\n";
    out << "set title '" << m << ", existing method'\n";
    out << gp_ccdf_plot_cmd("ccdf_" + m + "_existing.csv", crs, "ccdf_" + m + "_none.csv") << "\n";
    out << "set title '" << m << ", proposed method'\n";
    out << gp_ccdf_plot_cmd("ccdf_" + m + "_proposed.csv", crs, "ccdf_" + m + "_none.csv") << "\n";
    out << "unset multiplot\n";
}

void emit_plot_script(const BerExperimentResult& result, Modulation mod,
                      const ExperimentConfig& cfg, const std::string& path) {
    std::vector<double> crs;
    bool any = false;
    for (const auto& s : result.series) {
        if (s.mod != mod) continue;
        any = true;
        if (s.pipeline == Pipeline::Existing) crs.push_back(s.cr);
    }
    if (!any) throw std::invalid_argument("emit_plot_script: no BER series for this modulation");

    const std::string m = modulation_name(mod);
    const std::string none_csv = "ber_" + m + "_none.csv";
    auto out = open_output(path);
    out << "# BER vs Eb/N0, " << m << "\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 1200,520\n"
        << "set output '" << fs::path(path).stem().string() << ".png'\n"
        << "set multiplot layout 1,2\n"
        << "set logscale y\n"
        << "set xrange [" << fmt_full(cfg.ebn0_start_db) << ":" << fmt_full(cfg.ebn0_stop_db) << "]\n"
        << "set xlabel 'Eb/N0 (dB)'\n"
        << "set ylabel 'BER'\n"
        << "set key bottom left\n"
        << "set grid\n";
    for (const char* pipe : {"existing", "proposed"}) {
        out << "set title '" << m << ", " << pipe << " method'\n";
        out << "plot '" << none_csv << "' skip 1 using 2:6 with lines lw 2 lc 'black' title 'analytical', \\\n"
            << "     '" << none_csv << "' skip 1 using 2:3 with points pt 7 lc 'black' title 'unclipped'";
        int style = 1;
        for (double cr : crs) {
            out << ", \\\n     'ber_" << m << "_" << pipe << ".csv' skip 1 using 2:($1=="
                << fmt_full(cr) << "?$3:1/0) with linespoints pt 5 lc " << style++ << " title 'CR "
                << fmt2(cr) << "'";
        }
        out << "\n";
    }
    out << "unset multiplot\n";
}

} // namespace acfofdm
