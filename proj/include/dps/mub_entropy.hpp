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

#ifndef DPS_MUB_ENTROPY_HPP
#define DPS_MUB_ENTROPY_HPP

#include "dps/wigner_net.hpp"

namespace dps {

/// d + 1 orthonormal bases, pairwise mutually unbiased: every cross-basis
/// overlap has squared modulus 1/d.
class MubSet {
  public:
    MubSet(int dim, std::vector<std::vector<CVec>> bases);

    int dim() const { return dim_; }
    int num_bases() const { return static_cast<int>(bases_.size()); }
    const CVec& vec(int basis, int j) const {
        return bases_[static_cast<size_t>(basis)][static_cast<size_t>(j)];
    }

  private:
    int dim_;
    std::vector<std::vector<CVec>> bases_; // [basis][outcome]
};

/// Basis i = the net's striation-i projectors, ordered by line index.
MubSet mub_from_net(const QuantumNet& net);

/// Basis k = U^k applied to the computational basis; requires U^(d+1)
/// proportional to the identity.
MubSet mub_by_cycling(const CliffordUnitary& unitary);

/// p_ij = |<psi|ij>|^2 for a normalized state vector.
std::vector<std::vector<double>> probability_table(const MubSet& mubs, const CVec& psi);

/// sum_ij p_ij^2; equals 2 for every pure state measured in a complete MUB
/// set.
double design_sum(const std::vector<std::vector<double>>& table);

/// Order-2 Renyi entropy -log2(sum_j p_j^2) of one outcome distribution.
double renyi_entropy(const std::vector<double>& row);

struct EntropyReport {
    std::vector<std::vector<double>> probabilities;
    std::vector<double> renyi_per_basis;
    double average = 0.0;
    double bound = 0.0;       // log2(d+1) - 1
    double design_sum = 0.0;
    bool equality = false;    // average meets the bound and entropies are constant
};

EntropyReport average_entropy_report(const MubSet& mubs, const CVec& psi);

} // namespace dps

#endif
