/* corrocal -- chloride-induced corrosion calibration and prediction toolkit.
 *
 * C API of the shared library. All entry points return a status code;
 * detailed messages are available via corrocal_last_error(). Strings
 * returned through out-parameters are heap-allocated and must be released
 * with corrocal_string_free(). Handles are opaque and must be released with
 * their destroy function.
 */
#ifndef CORROCAL_H
#define CORROCAL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corrocal_status {
  CORROCAL_OK = 0,
  CORROCAL_ERR_IO = 1,       /* missing/unreadable/unwritable file */
  CORROCAL_ERR_DOMAIN = 2,   /* invalid configuration or data */
  CORROCAL_ERR_NUMERIC = 3,  /* fit/optimization/linear-algebra failure */
  CORROCAL_ERR_INVALID = 4   /* null pointer or bad handle usage */
} corrocal_status;

const char* corrocal_version(void);

/* Message of the most recent failure on this thread; empty string if none. */
const char* corrocal_last_error(void);

void corrocal_string_free(char* s);

/* ---- high-level runs (JSON config in, JSON result out) ---- */

corrocal_status corrocal_run_fit_temperature(const char* config_json,
                                             char** result_json);
corrocal_status corrocal_run_ingest(const char* config_json, char** result_json);
corrocal_status corrocal_run_calibrate(const char* config_json,
                                       char** result_json);
corrocal_status corrocal_run_sensitivity(const char* config_json,
                                         char** result_json);
corrocal_status corrocal_run_predict(const char* config_json, char** result_json);
corrocal_status corrocal_run_sanity_check(const char* config_json,
                                          char** result_json);

/* ---- temperature model handle ---- */

typedef struct corrocal_temp_model corrocal_temp_model;

/* model_json: {"amplitude":..,"phase_shift":..,"period":..,"offset":..} */
corrocal_status corrocal_temp_model_create(const char* model_json,
                                           corrocal_temp_model** out);
/* Least-squares cosine fit of (t [s], T [K]) samples. */
corrocal_status corrocal_temp_model_fit(const double* t, const double* temp_k,
                                        size_t n, corrocal_temp_model** out);
corrocal_status corrocal_temp_model_eval(const corrocal_temp_model* model,
                                         double t, double* temp_k);
corrocal_status corrocal_temp_model_to_json(const corrocal_temp_model* model,
                                            char** model_json);
void corrocal_temp_model_destroy(corrocal_temp_model* model);

/* ---- diffusion model handle (calibrated Gehlen/NN or literature RCM) ---- */

typedef struct corrocal_diffusion_model corrocal_diffusion_model;

corrocal_status corrocal_diffusion_model_create(const char* model_json,
                                                corrocal_diffusion_model** out);
corrocal_status corrocal_diffusion_model_load(const char* path,
                                              corrocal_diffusion_model** out);
/* D_Eff,C(t, T) in m^2/s under the default hyperparameters. */
corrocal_status corrocal_diffusion_model_d_eff(
    const corrocal_diffusion_model* model, double t, double temp_k,
    double* d_eff);
void corrocal_diffusion_model_destroy(corrocal_diffusion_model* model);

#ifdef __cplusplus
}
#endif

#endif /* CORROCAL_H */
