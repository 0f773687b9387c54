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

#ifndef DPS_ROTINV_HPP
#define DPS_ROTINV_HPP

#include "dps/mub_entropy.hpp"

namespace dps {

/// Eigenstates of a finite-order Clifford unitary (the rotationally invariant
/// states).  Labels are positions in the fixed (d+1)-th root system
/// mu_k = c^(1/(d+1)) e^(2 pi i k/(d+1)), principal branch.
struct RotInvFamily {
    struct Member {
        CVec state;
        int label = 0;
        Complex eigenvalue;
    };

    CliffordUnitary unitary;
    Complex phase_constant;   // c with U^(d+1) = c I
    Complex root;             // principal (d+1)-th root of c
    std::vector<Member> members;
    bool degenerate = false;  // some eigenvalue has multiplicity > 1
};

/// Spectral projectors by averaging powers of U against each candidate
/// eigenvalue; requires U^(d+1) proportional to the identity (tol 1e-8).
RotInvFamily eigenstates_by_projection(const CliffordUnitary& unitary);

struct ConstancyReport {
    double max_deviation = 0.0;                      // max over states and circles
    std::vector<std::vector<double>> circle_values;  // [member][circle] mean W
    std::vector<std::vector<double>> circle_spreads; // [member][circle] max - min
};

/// Verifies each member's Wigner function is constant on every circle of the
/// form (levels in mask order 1, ..., d-1).
ConstancyReport wigner_constancy_check(const RotInvFamily& family, const QuantumNet& net,
                                       const QuadraticForm& form);

struct PositivityEntry {
    int member = 0;
    int label = 0;
    bool positive = false;   // min Wigner value >= -1e-9
    double min_value = 0.0;
};

std::vector<PositivityEntry> positivity_scan(const RotInvFamily& family, const QuantumNet& net);

struct Eq14Result {
    CVec state;            // sqrt(1/3)|+++> + sqrt(2/3) e^{i phi}|--->
    double phi = 0.0;      // fitted relative phase
    bool swapped = false;  // fitted labeling: true if |+> is the -sqrt(3) eigenstate
    double overlap = 0.0;  // |<state|positive member>|
    double plus_overlap = 0.0;   // |<+++|state>|
    double center_value = 0.0;   // W(0,0) of the state
    double eigen_residual = 0.0; // ||U state - mu state||
};

/// Reconstructs the positive-Wigner member as a two-term superposition of
/// the symmetric products of X+Y+Z eigenstates.  The relative phase is fitted
/// on a 1e-4 rad grid with local refinement, and both labelings of the two
/// eigenstates are tried (the +/- names carry no eigenvalue convention).
/// Throws if no fit reaches overlap 1 - 1e-6 or if the family has no
/// positive member.
Eq14Result build_eq14_state(const RotInvFamily& family, const QuantumNet& net);

/// T_v applied to a seed state for every phase-space point v.
std::vector<std::pair<PhasePoint, CVec>> coherent_lattice(const CVec& psi0,
                                                          const FieldBasis& basis_q);

struct MinimalityEntry {
    int member = 0;
    int label = 0;
    bool minimal = false;   // constant per-basis entropy meeting the bound
    double average = 0.0;
    double bound = 0.0;
    double spread = 0.0;    // max - min of per-basis entropies
};

std::vector<MinimalityEntry> entropy_minimality_certificate(const RotInvFamily& family,
                                                            const MubSet& mubs);

} // namespace dps

#endif
