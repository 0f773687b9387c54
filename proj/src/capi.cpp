// Copyright 2026 The dps authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dps.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "dps/pipeline.hpp"

struct dps_config {
    dps::RunConfig config;
};

struct dps_toolkit {
    dps::Pipeline pipeline;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

dps_status status_of(const dps::Error& e) {
    set_error(e.what());
    switch (e.code()) {
        case dps::ErrorCode::invalid_argument:
            return DPS_ERR_INVALID_ARGUMENT;
        default:
            return DPS_ERR_DOMAIN;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool parse_format(const char* format, dps::OutputFormat* out) {
    if (format == nullptr || std::strcmp(format, "json") == 0) {
        *out = dps::OutputFormat::json;
        return true;
    }
    if (std::strcmp(format, "csv") == 0) {
        *out = dps::OutputFormat::csv;
        return true;
    }
    return false;
}

template <typename Fn>
dps_status run_report(const dps_toolkit* toolkit, const char* format, char** out, Fn&& fn) {
    if (toolkit == nullptr || out == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    dps::OutputFormat fmt;
    if (!parse_format(format, &fmt)) {
        set_error("format must be \"json\" or \"csv\"");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    try {
        dps::CommandResult result = fn(toolkit->pipeline, fmt);
        *out = copy_string(result.output);
        if (*out == nullptr) {
            set_error("allocation failed");
            return DPS_ERR_INTERNAL;
        }
        return result.checks_passed ? DPS_OK : DPS_ERR_CHECKS_FAILED;
    } catch (const dps::Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        set_error(e.what());
        return DPS_ERR_INTERNAL;
    }
}

dps::CVec state_from_interleaved(const dps::Pipeline& pipeline, const double* state_re_im) {
    const int d = pipeline.spec().dim();
    dps::CVec psi(static_cast<size_t>(d));
    for (int i = 0; i < d; i++) {
        psi[static_cast<size_t>(i)] = dps::Complex(state_re_im[2 * i], state_re_im[2 * i + 1]);
    }
    return psi;
}

} // namespace

extern "C" {

const char* dps_version(void) { return "1.0.0"; }

const char* dps_last_error(void) { return g_last_error.c_str(); }

dps_config* dps_config_new(int n) {
    if (n < 1 || n > 4) {
        set_error("qubit count must be between 1 and 4");
        return nullptr;
    }
    auto* config = new dps_config;
    config->config.n = n;
    return config;
}

void dps_config_free(dps_config* config) { delete config; }

dps_status dps_config_set_modulus(dps_config* config, unsigned bits) {
    if (config == nullptr) {
        set_error("null config");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    config->config.modulus_bits = bits;
    return DPS_OK;
}

dps_status dps_config_set_form(dps_config* config, unsigned a_mask, unsigned b_mask) {
    if (config == nullptr) {
        set_error("null config");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    config->config.form_a = a_mask;
    config->config.form_b = b_mask;
    return DPS_OK;
}

dps_status dps_config_set_basis(dps_config* config, const unsigned* masks, int count) {
    if (config == nullptr || (masks == nullptr && count > 0)) {
        set_error("null config or masks");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    if (masks == nullptr || count == 0) {
        config->config.basis_masks.reset();
    } else {
        config->config.basis_masks = std::vector<unsigned>(masks, masks + count);
    }
    return DPS_OK;
}

dps_status dps_config_set_seed(dps_config* config, unsigned long long seed) {
    if (config == nullptr) {
        set_error("null config");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    config->config.seed = seed;
    return DPS_OK;
}

dps_status dps_config_set_tolerance(dps_config* config, const char* name, double value) {
    if (config == nullptr || name == nullptr) {
        set_error("null config or name");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    if (value <= 0.0 || !config->config.tol.set(name, value)) {
        set_error(std::string("unknown tolerance or non-positive value: ") + name);
        return DPS_ERR_INVALID_ARGUMENT;
    }
    return DPS_OK;
}

dps_status dps_toolkit_new(const dps_config* config, dps_toolkit** out) {
    if (config == nullptr || out == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    try {
        *out = new dps_toolkit{dps::Pipeline(config->config)};
        return DPS_OK;
    } catch (const dps::Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        set_error(e.what());
        return DPS_ERR_INTERNAL;
    }
}

void dps_toolkit_free(dps_toolkit* toolkit) { delete toolkit; }

int dps_toolkit_dim(const dps_toolkit* toolkit) {
    return toolkit == nullptr ? 0 : toolkit->pipeline.spec().dim();
}

dps_status dps_field_info(const dps_toolkit* toolkit, const char* format, char** out) {
    return run_report(toolkit, format, out, [](const dps::Pipeline& p, dps::OutputFormat f) {
        return dps::run_field_info(p, f);
    });
}

dps_status dps_certify(const dps_toolkit* toolkit, const char* format, char** out) {
    return run_report(toolkit, format, out, [](const dps::Pipeline& p, dps::OutputFormat f) {
        return dps::run_certify(p, f);
    });
}

dps_status dps_reproduce(const dps_toolkit* toolkit, const char* section, const char* format,
                         char** out) {
    if (section == nullptr) {
        set_error("null section");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    std::string s = section;
    return run_report(toolkit, format, out, [s](const dps::Pipeline& p, dps::OutputFormat f) {
        return dps::run_reproduce(p, s, f);
    });
}

void dps_string_free(char* s) { std::free(s); }

dps_status dps_wigner_values(const dps_toolkit* toolkit, const double* state_re_im,
                             double* out_values) {
    if (toolkit == nullptr || state_re_im == nullptr || out_values == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    try {
        dps::CVec psi = state_from_interleaved(toolkit->pipeline, state_re_im);
        dps::WignerFunction w = dps::wigner(toolkit->pipeline.net(), psi);
        for (size_t i = 0; i < w.values.size(); i++) out_values[i] = w.values[i];
        return DPS_OK;
    } catch (const dps::Error& e) {
        return status_of(e);
    }
}

dps_status dps_max_center_value(const dps_toolkit* toolkit, double* out) {
    if (toolkit == nullptr || out == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    *out = dps::max_center_value(toolkit->pipeline.net(), toolkit->pipeline.origin());
    return DPS_OK;
}

int dps_eigenstate_count(const dps_toolkit* toolkit) {
    return toolkit == nullptr ? 0
                              : static_cast<int>(toolkit->pipeline.family().members.size());
}

dps_status dps_eigenstate(const dps_toolkit* toolkit, int index, double* out_re_im,
                          int* out_label) {
    if (toolkit == nullptr || out_re_im == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    const auto& members = toolkit->pipeline.family().members;
    if (index < 0 || index >= static_cast<int>(members.size())) {
        set_error("eigenstate index out of range");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    const auto& m = members[static_cast<size_t>(index)];
    for (size_t i = 0; i < m.state.size(); i++) {
        out_re_im[2 * i] = m.state[i].real();
        out_re_im[2 * i + 1] = m.state[i].imag();
    }
    if (out_label != nullptr) *out_label = m.label;
    return DPS_OK;
}

dps_status dps_entropy_report(const dps_toolkit* toolkit, const double* state_re_im,
                              char** out_json) {
    if (toolkit == nullptr || state_re_im == nullptr || out_json == nullptr) {
        set_error("null argument");
        return DPS_ERR_INVALID_ARGUMENT;
    }
    try {
        dps::CVec psi = state_from_interleaved(toolkit->pipeline, state_re_im);
        dps::EntropyReport report = dps::average_entropy_report(toolkit->pipeline.mubs(), psi);
        nlohmann::ordered_json doc;
        doc["probabilities"] = report.probabilities;
        doc["renyi_per_basis"] = report.renyi_per_basis;
        doc["average"] = report.average;
        doc["bound"] = report.bound;
        doc["design_sum"] = report.design_sum;
        doc["equality"] = report.equality;
        *out_json = copy_string(doc.dump(2) + "\n");
        return *out_json != nullptr ? DPS_OK : DPS_ERR_INTERNAL;
    } catch (const dps::Error& e) {
        return status_of(e);
    }
}

} // extern "C"
