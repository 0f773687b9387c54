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

#ifndef DPS_WIGNER_NET_HPP
#define DPS_WIGNER_NET_HPP

#include <map>
#include <tuple>

#include "dps/pauli.hpp"

namespace dps {

/// The quantum net: a rank-1 projector for each of the d(d+1) phase-space
/// lines, built by assigning computational basis states to the vertical lines
/// and transporting them with a primitive rotation R and a unitary U
/// realizing it.  The phase-point operators A(alpha) = sum_{lines through
/// alpha} Q(line) - I are cached alongside.
class QuantumNet {
  public:
    /// Requires: U realizes R on the generators, and R's orbit on striations
    /// is a single (d+1)-cycle (the primitive-rotation property that makes
    /// the assignment cover every line).
    static QuantumNet build(const LinearMap& rotation, const CliffordUnitary& unitary,
                            const FieldBasis& basis_q);

    const FieldSpec& spec() const { return spec_; }
    const FieldBasis& basis_q() const { return basis_q_; }
    const LinearMap& rotation() const { return rotation_; }
    const CliffordUnitary& unitary() const { return unitary_; }
    const TranslationSet& translations() const { return translations_; }

    int striation_count() const { return static_cast<int>(striations_.size()); }
    const Striation& striation(int i) const { return striations_[static_cast<size_t>(i)]; }
    const CMatrix& projector(int striation, int line_index) const;
    const CMatrix& projector(const Line& line) const;

    /// A(alpha): Hermitian, trace 1, Tr[A(a)A(b)] = d delta_ab.
    const CMatrix& phase_point_operator(const PhasePoint& alpha) const;

  private:
    QuantumNet(const FieldSpec& spec, const FieldBasis& basis_q, const LinearMap& rotation,
               CliffordUnitary unitary);

    FieldSpec spec_;
    FieldBasis basis_q_;
    LinearMap rotation_;
    CliffordUnitary unitary_;
    TranslationSet translations_;
    std::vector<Striation> striations_;
    std::vector<std::vector<CMatrix>> projectors_;
    std::vector<CMatrix> phase_ops_; // indexed q_bits * d + p_bits
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::pair<int, int>> line_index_;
};

/// The Wigner array W(alpha) = Tr[rho A(alpha)] / d, indexed [q][p] by
/// coordinate masks.
struct WignerFunction {
    int d = 0;
    std::vector<double> values;
    CMatrix state;

    double at(unsigned q_bits, unsigned p_bits) const {
        return values[static_cast<size_t>(q_bits) * d + p_bits];
    }
    double sum() const;
    double min_value() const;
};

/// Computes the Wigner function; rho must be Hermitian, trace 1, and positive
/// semidefinite to tolerance 1e-10.
WignerFunction wigner(const QuantumNet& net, const CMatrix& rho);

/// Convenience: Wigner function of a pure state.
WignerFunction wigner(const QuantumNet& net, const CVec& psi);

/// Largest eigenvalue of A(alpha)/d: the maximum Wigner value any state can
/// attain at alpha.
double max_center_value(const QuantumNet& net, const PhasePoint& alpha);

/// Inverse transform rho = sum_alpha W(alpha) A(alpha).
CMatrix reconstruct_state(const QuantumNet& net, const WignerFunction& w);

struct CovarianceReport {
    int states_tested = 0;
    double max_translation_deviation = 0.0;
    double max_rotation_deviation = 0.0;
};

/// Checks, on seeded random pure states, that translating (rotating) the
/// state permutes Wigner values by the corresponding point map.
CovarianceReport covariance_check(const QuantumNet& net, int num_states, std::uint64_t seed);

} // namespace dps

#endif
