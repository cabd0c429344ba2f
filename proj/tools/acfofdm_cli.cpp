// Command-line front end for the ACF-OFDM experiment library. Talks to the
// shared library through the C interface only.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "acfofdm.h"

namespace {

struct ConfigDeleter {
    void operator()(acf_config* c) const { acf_config_free(c); }
};
using ConfigPtr = std::unique_ptr<acf_config, ConfigDeleter>;

int die(const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), acf_error_message());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OFDM clipping-and-filtering PAPR/BER experiment runner"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    std::string config_path;
    std::string out_dir;
    std::string seed;
    std::string trials;
    app.add_option("--config", config_path, "flat key = value configuration file");
    app.add_option("--out", out_dir, "output directory for CSV files and plot scripts");
    app.add_option("--seed", seed, "master random seed");
    app.add_option("--trials", trials, "Monte Carlo blocks per CCDF curve");

    auto* ccdf = app.add_subcommand("ccdf", "PAPR distribution curves and their CCDF readouts");
    auto* ber = app.add_subcommand("ber", "BER vs Eb/N0 sweep over the AWGN channel");
    auto* tables =
        app.add_subcommand("tables", "run both experiments and emit the comparison tables");
    auto* design = app.add_subcommand("design-filter",
                                      "dump the proposed filter's sections and response");

    CLI11_PARSE(app, argc, argv);

    ConfigPtr cfg(acf_config_create());
    if (!cfg) {
        std::fprintf(stderr, "error: out of memory\n");
        return 1;
    }
    if (!config_path.empty() && acf_config_load(cfg.get(), config_path.c_str()) != ACF_OK) {
        return die("loading " + config_path);
    }
    if (!out_dir.empty() && acf_config_set(cfg.get(), "out_dir", out_dir.c_str()) != ACF_OK) {
        return die("--out");
    }
    if (!seed.empty() && acf_config_set(cfg.get(), "seed", seed.c_str()) != ACF_OK) {
        return die("--seed");
    }
    if (!trials.empty() && acf_config_set(cfg.get(), "trials", trials.c_str()) != ACF_OK) {
        return die("--trials");
    }

    if (ccdf->parsed()) {
        if (acf_run_ccdf(cfg.get()) != ACF_OK) return die("ccdf experiment");
    } else if (ber->parsed()) {
        if (acf_run_ber(cfg.get()) != ACF_OK) return die("ber experiment");
    } else if (tables->parsed()) {
        if (acf_run_tables(cfg.get()) != ACF_OK) return die("tables");
    } else if (design->parsed()) {
        if (acf_design_filter_dump(cfg.get()) != ACF_OK) return die("design-filter");
    }
    return 0;
}
