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

#ifndef DPS_PAULI_HPP
#define DPS_PAULI_HPP

#include <utility>

#include "dps/cmatrix.hpp"
#include "dps/phase_space.hpp"

namespace dps {

CMatrix pauli_i();
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// Ket index of a coefficient vector: qubit 0 is the leftmost tensor factor
/// (most significant bit).
int ket_index(const std::vector<int>& coeffs);

/// Translation operator for the phase-space point (q, p): the n-qubit string
/// X^{q_1}Z^{p_1} x ... x X^{q_n}Z^{p_n}, with q expanded in basisQ and p in
/// the dual of basisQ.
struct TranslationOperator {
    PhasePoint point;
    CMatrix matrix;
    FieldBasis basis_q;
    FieldBasis basis_p; // dual of basis_q
};

TranslationOperator translation(const PhasePoint& v, const FieldBasis& basis_q);

/// All d^2 translation matrices for one field/basis choice, indexed by the
/// coordinate masks of the point.
class TranslationSet {
  public:
    TranslationSet(const FieldSpec& spec, const FieldBasis& basis_q);

    const CMatrix& at(const PhasePoint& v) const;
    const CMatrix& at(unsigned q_bits, unsigned p_bits) const;
    const FieldSpec& spec() const { return spec_; }
    const FieldBasis& basis_q() const { return basis_q_; }

  private:
    FieldSpec spec_;
    FieldBasis basis_q_;
    std::vector<CMatrix> mats_;
};

/// Sign s with T_u T_v = s T_v T_u; +1 exactly when u and v are collinear
/// with the origin.
int weyl_commutation_sign(const PhasePoint& u, const PhasePoint& v, const FieldBasis& basis_q);

/// A unitary together with the phase-space linear map its conjugation action
/// realizes on the translation operators.
struct CliffordUnitary {
    CMatrix matrix;
    LinearMap map;
};

/// Synthesize a unitary U with U T_v U^dag proportional to T_{L v} for every
/// point v.  Requires det L = 1.  The output gauge is fixed: the conjugation
/// image of each generator's Hermitian Pauli string carries sign +1, and the
/// first nonzero entry of U (row-major) is real positive.
CliffordUnitary clifford_for(const LinearMap& map, const FieldBasis& basis_q);

/// The unitary used for net construction.  Starts from clifford_for; when
/// some power R^j equals [[1, 1], [1, 0]] and the basis is self-dual, that
/// power acts qubit-wise on binary coordinates, and the result is re-gauged
/// by a translation operator so U^j becomes the matching tensor power of the
/// single-qubit cycle unitary.  This pins the gauge whose eigenstate family
/// sits at the origin.
CliffordUnitary canonical_rotation_unitary(const LinearMap& rotation, const FieldBasis& basis_q);

/// Identify U T_v U^dag among the translation operators: returns the point w
/// and the phase with U T_v U^dag = phase * T_w.  Throws not_clifford if the
/// image is not proportional to any translation operator.
std::pair<PhasePoint, Complex> conjugation_image(const CMatrix& u, const PhasePoint& v,
                                                 const FieldBasis& basis_q);
std::pair<PhasePoint, Complex> conjugation_image(const CMatrix& u, const PhasePoint& v,
                                                 const TranslationSet& translations);

} // namespace dps

#endif
