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

#ifndef DPS_PIPELINE_HPP
#define DPS_PIPELINE_HPP

#include <optional>
#include <string>

#include "dps/rotinv.hpp"

namespace dps {

/// Numerical tolerances used by the certification checks; overridable per
/// run, defaults match the documented contracts.
struct Tolerances {
    double mub_overlap = 1e-10;
    double design_sum = 1e-10;
    double entropy_equality = 1e-9;
    double covariance = 1e-9;
    double constancy = 1e-9;
    double reconstruction = 1e-9;

    bool set(const std::string& name, double value);
};

struct RunConfig {
    int n = 2;
    std::optional<unsigned> modulus_bits;             // default: default_modulus(n)
    std::optional<unsigned> form_a, form_b;           // default: (1, smallest primitive b)
    std::optional<std::vector<unsigned>> basis_masks; // default: self-dual basis
    std::uint64_t seed = 0;
    Tolerances tol;
};

/// Everything derived from one configuration: field, basis, quadratic form,
/// primitive rotation, canonical unitary, quantum net, MUB set, and the
/// family of rotationally invariant states.  n is capped at 4.
class Pipeline {
  public:
    explicit Pipeline(const RunConfig& config);

    const RunConfig& config() const { return config_; }
    const FieldSpec& spec() const { return spec_; }
    const FieldBasis& basis() const { return basis_; }
    const QuadraticForm& form() const { return form_; }
    const LinearMap& rotation() const { return rotation_; }
    const CliffordUnitary& unitary() const { return net_.unitary(); }
    const QuantumNet& net() const { return net_; }
    const MubSet& mubs() const { return mubs_; }
    const RotInvFamily& family() const { return family_; }

    PhasePoint origin() const;

  private:
    RunConfig config_;
    FieldSpec spec_;
    FieldBasis basis_;
    QuadraticForm form_;
    LinearMap rotation_;
    QuantumNet net_;
    MubSet mubs_;
    RotInvFamily family_;
};

enum class OutputFormat { json, csv };

struct CommandResult {
    std::string output;
    bool checks_passed = true;
};

/// Field tables (n <= 2) or summary properties, the chosen basis and its
/// dual.
CommandResult run_field_info(const Pipeline& pipeline, OutputFormat format);

/// Seed-controlled sweep over every module invariant for the configured n;
/// deterministic output for a fixed (config, seed).
CommandResult run_certify(const Pipeline& pipeline, OutputFormat format);

/// Re-runs one of the worked examples ("one_qubit", "two_qubit",
/// "three_qubit") and checks its reference numbers.  The pipeline must carry
/// the section's field and form.
CommandResult run_reproduce(const Pipeline& pipeline, const std::string& section,
                            OutputFormat format);

/// The canonical configuration for a worked-example section.
RunConfig reproduce_config(const std::string& section);

/// Documented CSV layout: header row of p masks, one row per q mask.
std::string wigner_to_csv(const WignerFunction& w);

} // namespace dps

#endif
