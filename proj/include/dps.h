/* Copyright 2026 The dps authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the discrete phase-space toolkit.
 *
 * A dps_config describes one run (qubit count, field modulus, quadratic
 * form, field basis, seed, tolerances).  A dps_toolkit is the fully built
 * pipeline: field, basis, primitive rotation, Clifford unitary, quantum net,
 * MUB set, and the family of rotationally invariant states.  Reports are
 * returned as heap-allocated strings; release them with dps_string_free.
 *
 * All functions returning dps_status leave a human-readable message for the
 * most recent failure in dps_last_error() (thread-local).
 */

#ifndef DPS_H
#define DPS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dps_status {
    DPS_OK = 0,
    DPS_ERR_INVALID_ARGUMENT = 1, /* malformed configuration or input */
    DPS_ERR_DOMAIN = 2,           /* mathematical precondition violated */
    DPS_ERR_CHECKS_FAILED = 3,    /* report produced, but some checks failed */
    DPS_ERR_INTERNAL = 4
} dps_status;

typedef struct dps_config dps_config;
typedef struct dps_toolkit dps_toolkit;

const char* dps_version(void);
const char* dps_last_error(void);

/* Configuration.  n is the qubit count, 1 to 4.  Returns NULL on invalid n. */
dps_config* dps_config_new(int n);
void dps_config_free(dps_config* config);
dps_status dps_config_set_modulus(dps_config* config, unsigned bits);
dps_status dps_config_set_form(dps_config* config, unsigned a_mask, unsigned b_mask);
/* masks == NULL or count == 0 selects the self-dual basis. */
dps_status dps_config_set_basis(dps_config* config, const unsigned* masks, int count);
dps_status dps_config_set_seed(dps_config* config, unsigned long long seed);
/* Known names: mub_overlap, design_sum, entropy_equality, covariance,
 * constancy, reconstruction. */
dps_status dps_config_set_tolerance(dps_config* config, const char* name, double value);

dps_status dps_toolkit_new(const dps_config* config, dps_toolkit** out);
void dps_toolkit_free(dps_toolkit* toolkit);
int dps_toolkit_dim(const dps_toolkit* toolkit); /* d = 2^n */

/* Reports.  format is "json" or "csv".  dps_certify and dps_reproduce return
 * DPS_OK when every check passed and DPS_ERR_CHECKS_FAILED otherwise; the
 * report is written in both cases.  Sections: "one_qubit", "two_qubit",
 * "three_qubit" (hyphens accepted). */
dps_status dps_field_info(const dps_toolkit* toolkit, const char* format, char** out);
dps_status dps_certify(const dps_toolkit* toolkit, const char* format, char** out);
dps_status dps_reproduce(const dps_toolkit* toolkit, const char* section, const char* format,
                         char** out);
void dps_string_free(char* s);

/* Numeric queries.  States are length-2d arrays of interleaved re,im pairs;
 * Wigner values are d*d doubles, row-major with the q mask as row index. */
dps_status dps_wigner_values(const dps_toolkit* toolkit, const double* state_re_im,
                             double* out_values);
dps_status dps_max_center_value(const dps_toolkit* toolkit, double* out);
int dps_eigenstate_count(const dps_toolkit* toolkit);
dps_status dps_eigenstate(const dps_toolkit* toolkit, int index, double* out_re_im,
                          int* out_label);
/* Probability table, per-basis Renyi entropies, average, bound, design sum. */
dps_status dps_entropy_report(const dps_toolkit* toolkit, const double* state_re_im,
                              char** out_json);

#ifdef __cplusplus
}
#endif

#endif
