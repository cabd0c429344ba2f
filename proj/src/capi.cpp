#include "acfofdm.h"

#include <cstring>
#include <fstream>
#include <string>

#include "acfofdm/experiments.hpp"
#include "acfofdm/ofdm.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ACF_OK;
    } catch (const std::domain_error& e) {
        return fail(ACF_ERR_UNDEFINED_METRIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ACF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(ACF_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(ACF_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(ACF_ERR_UNKNOWN, "unknown error");
    }
}

} // namespace

struct acf_config {
    acfofdm::ExperimentConfig cfg;
};

struct acf_filter {
    acfofdm::ChebyshevDesign design;
};

struct acf_ccdf {
    acfofdm::CcdfCurve curve;
};

extern "C" {

const char* acf_version(void) { return "1.0.0"; }

const char* acf_error_message(void) { return g_last_error.c_str(); }

acf_config* acf_config_create(void) {
    return new (std::nothrow) acf_config{};
}

int acf_config_load(acf_config* cfg, const char* path) {
    if (!cfg || !path) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { cfg->cfg = acfofdm::ExperimentConfig::load(path); });
}

int acf_config_set(acf_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { cfg->cfg.set(key, value); });
}

void acf_config_free(acf_config* cfg) { delete cfg; }

int acf_run_ccdf(const acf_config* cfg) {
    if (!cfg) return fail(ACF_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] { acfofdm::run_ccdf_experiment(cfg->cfg); });
}

int acf_run_ber(const acf_config* cfg) {
    if (!cfg) return fail(ACF_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] { acfofdm::run_ber_experiment(cfg->cfg); });
}

int acf_run_tables(const acf_config* cfg) {
    if (!cfg) return fail(ACF_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] { acfofdm::run_tables(cfg->cfg); });
}

int acf_design_filter_dump(const acf_config* cfg) {
    if (!cfg) return fail(ACF_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] { acfofdm::design_filter_dump(cfg->cfg); });
}

int acf_papr_db(const double* re, const double* im, size_t len, double* out_db) {
    if (!re || !out_db || len == 0) return fail(ACF_ERR_INVALID_ARGUMENT, "null buffer or empty signal");
    return guarded([&] {
        std::vector<acfofdm::cplx> samples(len);
        for (size_t i = 0; i < len; ++i) samples[i] = {re[i], im ? im[i] : 0.0};
        *out_db = acfofdm::papr_db(std::span<const acfofdm::cplx>(samples));
    });
}

int acf_clip(const double* in, double* out, size_t len, double amplitude) {
    if (!in || !out || len == 0) return fail(ACF_ERR_INVALID_ARGUMENT, "null buffer or empty signal");
    if (amplitude <= 0.0) return fail(ACF_ERR_INVALID_ARGUMENT, "clip amplitude must be positive");
    for (size_t i = 0; i < len; ++i) {
        const double x = in[i];
        out[i] = x >= amplitude ? amplitude : (x <= -amplitude ? -amplitude : x);
    }
    g_last_error.clear();
    return ACF_OK;
}

int acf_analytical_ber(const char* scheme, double ebn0_db, double* out_ber) {
    if (!scheme || !out_ber) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_ber = acfofdm::analytical_ber(acfofdm::modulation_from_string(scheme), ebn0_db);
    });
}

acf_filter* acf_filter_design_cheby1(unsigned order, double ripple_db, double f_low_hz,
                                     double f_high_hz, double sample_rate_hz) {
    acf_filter* out = nullptr;
    const int rc = guarded([&] {
        acfofdm::ChebyshevSpec spec;
        spec.order = order;
        spec.ripple_db = ripple_db;
        spec.f_low_hz = f_low_hz;
        spec.f_high_hz = f_high_hz;
        out = new acf_filter{acfofdm::design_chebyshev1_bandpass(spec, sample_rate_hz)};
    });
    return rc == ACF_OK ? out : nullptr;
}

int acf_filter_response(const acf_filter* filter, size_t grid_len, double* re, double* im) {
    if (!filter || !re || !im || grid_len == 0) {
        return fail(ACF_ERR_INVALID_ARGUMENT, "null argument or empty grid");
    }
    return guarded([&] {
        const acfofdm::FilterResponse r = filter->design.response_grid(grid_len);
        for (size_t k = 0; k < grid_len; ++k) {
            re[k] = r.h[k].real();
            im[k] = r.h[k].imag();
        }
    });
}

int acf_filter_sos(const acf_filter* filter, double* coeffs, size_t* n_sections) {
    if (!filter || !n_sections) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    const auto& sections = filter->design.sections;
    if (!coeffs) {
        *n_sections = sections.size();
        g_last_error.clear();
        return ACF_OK;
    }
    if (*n_sections < sections.size()) return fail(ACF_ERR_INVALID_ARGUMENT, "buffer too small");
    for (size_t i = 0; i < sections.size(); ++i) {
        const acfofdm::Biquad& s = sections[i];
        coeffs[6 * i + 0] = s.b0;
        coeffs[6 * i + 1] = s.b1;
        coeffs[6 * i + 2] = s.b2;
        coeffs[6 * i + 3] = s.a0;
        coeffs[6 * i + 4] = s.a1;
        coeffs[6 * i + 5] = s.a2;
    }
    *n_sections = sections.size();
    g_last_error.clear();
    return ACF_OK;
}

int acf_filter_write_sos(const acf_filter* filter, const char* path) {
    if (!filter || !path) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ofstream out(path);
        if (!out) throw std::runtime_error(std::string("cannot write file: ") + path);
        out << filter->design.sos_text();
    });
}

void acf_filter_free(acf_filter* filter) { delete filter; }

acf_ccdf* acf_collect_papr(const acf_config* cfg, const char* modulation, const char* pipeline,
                           double cr, uint64_t trials) {
    if (!cfg || !modulation || !pipeline) {
        fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
        return nullptr;
    }
    acf_ccdf* out = nullptr;
    const int rc = guarded([&] {
        const acfofdm::Modulation mod = acfofdm::modulation_from_string(modulation);
        const acfofdm::Pipeline pipe = acfofdm::pipeline_from_string(pipeline);
        const acfofdm::PipelineContext ctx = cfg->cfg.context(mod);
        out = new acf_ccdf{acfofdm::collect_papr(ctx, pipe, cr, trials, cfg->cfg.seed,
                                                 cfg->cfg.papr_norm, cfg->cfg.workers)};
    });
    return rc == ACF_OK ? out : nullptr;
}

int acf_ccdf_size(const acf_ccdf* curve, size_t* out_len) {
    if (!curve || !out_len) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    *out_len = curve->curve.size();
    g_last_error.clear();
    return ACF_OK;
}

int acf_ccdf_samples(const acf_ccdf* curve, double* out, size_t len) {
    if (!curve || !out) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    const auto& samples = curve->curve.sorted_samples();
    if (len < samples.size()) return fail(ACF_ERR_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(out, samples.data(), samples.size() * sizeof(double));
    g_last_error.clear();
    return ACF_OK;
}

int acf_ccdf_value_at(const acf_ccdf* curve, double level, double* out_papr_db) {
    if (!curve || !out_papr_db) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out_papr_db = curve->curve.papr_at_ccdf(level); });
}

int acf_ccdf_write_csv(const acf_ccdf* curve, const char* path) {
    if (!curve || !path) return fail(ACF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { curve->curve.write_csv(path); });
}

void acf_ccdf_free(acf_ccdf* curve) { delete curve; }

} // extern "C"
