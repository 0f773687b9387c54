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

// Command-line front end; exit codes: 0 all checks passed, 1 checks failed,
// 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dps.h"

namespace {

struct Options {
    std::optional<int> n;
    std::optional<unsigned> modulus;
    std::optional<unsigned> form_a, form_b;
    std::string basis = "self-dual";
    unsigned long long seed = 0;
    std::string format = "json";
    std::string out_path;
};

void add_common_options(CLI::App* cmd, Options& opt, bool field_flags) {
    cmd->add_option("--n", opt.n, "number of qubits (1-4)");
    if (field_flags) {
        cmd->add_option("--modulus", opt.modulus, "field modulus polynomial as a bit mask");
        cmd->add_option("--form-a", opt.form_a, "quadratic form coefficient a (bit mask)");
        cmd->add_option("--form-b", opt.form_b, "quadratic form coefficient b (bit mask)");
        cmd->add_option("--basis", opt.basis,
                        "field basis: \"self-dual\" or comma-separated element masks");
    }
    cmd->add_option("--seed", opt.seed, "seed for randomized sweeps");
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write the report to this path instead of stdout");
}

int config_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// Builds the toolkit from parsed options; returns nullptr after printing the
// configuration error.
dps_toolkit* make_toolkit(const Options& opt, int default_n) {
    int n = opt.n.value_or(default_n);
    dps_config* config = dps_config_new(n);
    if (config == nullptr) {
        config_error(dps_last_error());
        return nullptr;
    }
    auto fail = [&]() -> dps_toolkit* {
        config_error(dps_last_error());
        dps_config_free(config);
        return nullptr;
    };
    if (opt.modulus && dps_config_set_modulus(config, *opt.modulus) != DPS_OK) return fail();
    if (opt.form_a || opt.form_b) {
        if (!opt.form_a || !opt.form_b) {
            config_error("--form-a and --form-b must be given together");
            dps_config_free(config);
            return nullptr;
        }
        if (dps_config_set_form(config, *opt.form_a, *opt.form_b) != DPS_OK) return fail();
    }
    if (opt.basis != "self-dual") {
        std::vector<unsigned> masks;
        std::stringstream ss(opt.basis);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                masks.push_back(static_cast<unsigned>(std::stoul(item)));
            } catch (...) {
                config_error("basis must be \"self-dual\" or comma-separated integers");
                dps_config_free(config);
                return nullptr;
            }
        }
        if (dps_config_set_basis(config, masks.data(), static_cast<int>(masks.size())) != DPS_OK) {
            return fail();
        }
    }
    if (dps_config_set_seed(config, opt.seed) != DPS_OK) return fail();

    dps_toolkit* toolkit = nullptr;
    dps_status status = dps_toolkit_new(config, &toolkit);
    dps_config_free(config);
    if (status != DPS_OK) {
        config_error(dps_last_error());
        return nullptr;
    }
    return toolkit;
}

int emit(const Options& opt, const char* report) {
    if (opt.out_path.empty()) {
        std::cout << report;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        return config_error("cannot open output path: " + opt.out_path);
    }
    out << report;
    return 0;
}

int run_command(const Options& opt, int default_n, const std::string& section) {
    dps_toolkit* toolkit = make_toolkit(opt, default_n);
    if (toolkit == nullptr) return 2;

    char* report = nullptr;
    dps_status status;
    if (section == "field-info") {
        status = dps_field_info(toolkit, opt.format.c_str(), &report);
    } else if (section == "certify") {
        status = dps_certify(toolkit, opt.format.c_str(), &report);
    } else {
        status = dps_reproduce(toolkit, section.c_str(), opt.format.c_str(), &report);
    }

    int code;
    if (status == DPS_OK) {
        code = 0;
    } else if (status == DPS_ERR_CHECKS_FAILED) {
        code = 1;
    } else {
        code = config_error(dps_last_error());
    }
    if (report != nullptr) {
        int emit_code = emit(opt, report);
        if (emit_code != 0) code = emit_code;
        dps_string_free(report);
    }
    dps_toolkit_free(toolkit);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete phase-space toolkit for n qubits"};
    app.require_subcommand(1);

    Options field_opt, cert_opt, repro_opt;
    std::string section;

    CLI::App* field_cmd =
        app.add_subcommand("field-info", "field tables, chosen basis, and its dual");
    add_common_options(field_cmd, field_opt, true);

    CLI::App* cert_cmd =
        app.add_subcommand("certify", "run every module invariant with seeded sweeps");
    add_common_options(cert_cmd, cert_opt, true);

    CLI::App* repro_cmd =
        app.add_subcommand("reproduce", "re-run a worked example and check its numbers");
    repro_cmd->add_option("section", section, "one-qubit, two-qubit, or three-qubit")
        ->required();
    add_common_options(repro_cmd, repro_opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (field_cmd->parsed()) {
        if (!field_opt.n) return config_error("--n is required");
        return run_command(field_opt, *field_opt.n, "field-info");
    }
    if (cert_cmd->parsed()) {
        if (!cert_opt.n) return config_error("--n is required");
        return run_command(cert_opt, *cert_opt.n, "certify");
    }

    // reproduce: derive n (and the pinned field/form) from the section.
    std::string normalized = section;
    for (auto& ch : normalized) {
        if (ch == '-') ch = '_';
    }
    int default_n;
    if (normalized == "one_qubit") default_n = 1;
    else if (normalized == "two_qubit") default_n = 2;
    else if (normalized == "three_qubit") default_n = 3;
    else return config_error("unknown section: " + section);
    if (normalized == "three_qubit") {
        if (!repro_opt.modulus) repro_opt.modulus = 13;
        if (!repro_opt.form_a) repro_opt.form_a = 1;
        if (!repro_opt.form_b) repro_opt.form_b = 1;
    }
    return run_command(repro_opt, default_n, normalized);
}
