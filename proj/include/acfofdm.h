/* C interface to the ACF-OFDM simulation library.
 *
 * All entry points return ACF_OK (0) on success or a nonzero error code;
 * acf_error_message() describes the most recent failure on the calling
 * thread. Objects returned as pointers are opaque handles owned by the
 * caller and released with the matching *_free function.
 */
#ifndef ACFOFDM_H
#define ACFOFDM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum acf_status {
    ACF_OK = 0,
    ACF_ERR_INVALID_ARGUMENT = 1,
    ACF_ERR_IO = 2,
    ACF_ERR_UNDEFINED_METRIC = 3,
    ACF_ERR_UNKNOWN = 4
};

typedef struct acf_config acf_config;
typedef struct acf_filter acf_filter;
typedef struct acf_ccdf acf_ccdf;

const char* acf_version(void);

/* Last error message for the calling thread; empty string if none. */
const char* acf_error_message(void);

/* --- experiment configuration ------------------------------------------- */

/* Fresh configuration with the reference defaults (N=128, L=8, BW=1 MHz,
 * f_c=2 MHz, CP=32, CR list 0.8..1.6, both modulations). */
acf_config* acf_config_create(void);

/* Parse a flat "key = value" file ('#' starts a comment) over the defaults. */
int acf_config_load(acf_config* cfg, const char* path);

/* Set a single key, same keys as the config file. */
int acf_config_set(acf_config* cfg, const char* key, const char* value);

void acf_config_free(acf_config* cfg);

/* --- experiment runners (write CSV/plot files into out_dir) -------------- */

int acf_run_ccdf(const acf_config* cfg);
int acf_run_ber(const acf_config* cfg);
int acf_run_tables(const acf_config* cfg);
int acf_design_filter_dump(const acf_config* cfg);

/* --- direct signal operations -------------------------------------------- */

/* Peak-to-average power ratio in dB of a complex (or real when im is NULL)
 * sequence. Fails with ACF_ERR_UNDEFINED_METRIC on an all-zero signal. */
int acf_papr_db(const double* re, const double* im, size_t len, double* out_db);

/* Hard amplitude limiter on a real waveform. in and out may alias. */
int acf_clip(const double* in, double* out, size_t len, double amplitude);

/* Analytical AWGN bit error rate; scheme is "qpsk" or "qam16". */
int acf_analytical_ber(const char* scheme, double ebn0_db, double* out_ber);

/* --- Chebyshev Type I band-pass design ------------------------------------ */

acf_filter* acf_filter_design_cheby1(unsigned order, double ripple_db, double f_low_hz,
                                     double f_high_hz, double sample_rate_hz);

/* Complex response on a grid of grid_len FFT bins spanning [0, fs). */
int acf_filter_response(const acf_filter* filter, size_t grid_len, double* re, double* im);

/* Second-order sections; coeffs receives 6 doubles per section
 * (b0 b1 b2 a0 a1 a2). Call with coeffs == NULL to query the count. */
int acf_filter_sos(const acf_filter* filter, double* coeffs, size_t* n_sections);

/* Write the sections as plain text, one section per line. */
int acf_filter_write_sos(const acf_filter* filter, const char* path);

void acf_filter_free(acf_filter* filter);

/* --- Monte Carlo PAPR distribution ---------------------------------------- */

/* Collect the PAPR distribution for "none", "existing" or "proposed"
 * processing of random blocks under the given configuration. cr is ignored
 * for "none". */
acf_ccdf* acf_collect_papr(const acf_config* cfg, const char* modulation, const char* pipeline,
                           double cr, uint64_t trials);

int acf_ccdf_size(const acf_ccdf* curve, size_t* out_len);

/* Sorted PAPR samples in dB, ascending. */
int acf_ccdf_samples(const acf_ccdf* curve, double* out, size_t len);

/* Order-statistic readout: smallest sample whose exceedance probability is
 * <= level. */
int acf_ccdf_value_at(const acf_ccdf* curve, double level, double* out_papr_db);

/* Two-column CSV export (papr_db, ccdf). */
int acf_ccdf_write_csv(const acf_ccdf* curve, const char* path);

void acf_ccdf_free(acf_ccdf* curve);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ACFOFDM_H */
