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

#ifndef DPS_FIELD_HPP
#define DPS_FIELD_HPP

#include <cstdint>
#include <vector>

#include "dps/error.hpp"

namespace dps {

/// Description of GF(2^n): extension degree n (1 <= n <= 8) and the
/// irreducible modulus polynomial, encoded as an (n+1)-bit mask with bit i
/// holding the coefficient of x^i.  Elements are n-bit masks in the same
/// encoding, i.e. polynomial representatives in the generator b = class of x.
struct FieldSpec {
    int n = 1;
    unsigned modulus = 0b10;

    FieldSpec(int n_, unsigned modulus_bits);

    /// Field with the default modulus for degree n (see default_modulus).
    static FieldSpec standard(int n_);

    int dim() const { return 1 << n; }
    bool operator==(const FieldSpec& o) const { return n == o.n && modulus == o.modulus; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

/// The default modulus for each degree: the numerically smallest irreducible
/// mask, except n = 3 where x^3 + x^2 + 1 (mask 13) is used so that field
/// literals written in powers of the generator match the GF(8) convention
/// b^3 = b^2 + 1 used throughout the worked three-qubit example.
unsigned default_modulus(int n);

/// True if the mask encodes a polynomial over GF(2) with no nontrivial factor.
bool is_irreducible_poly(unsigned mask);

class FieldElement {
  public:
    FieldElement(const FieldSpec& spec, unsigned bits);

    unsigned bits() const { return bits_; }
    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return bits_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; throws division_by_zero on the zero element.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    FieldElement zero() const { return FieldElement(spec_, 0); }
    FieldElement one() const { return FieldElement(spec_, 1); }

  private:
    FieldSpec spec_;
    unsigned bits_;
};

/// Absolute trace x + x^2 + x^4 + ... + x^(2^(n-1)); always 0 or 1.
FieldElement trace(const FieldElement& x);

/// All d elements of the field in mask order 0, 1, ..., d-1.
std::vector<FieldElement> all_elements(const FieldSpec& spec);

/// An ordered GF(2)-basis (b_1, ..., b_n) of the field.  The dual basis
/// (unique solution of trace(b_i * b*_j) = delta_ij) is computed up front so
/// coordinate expansions are trace evaluations.
class FieldBasis {
  public:
    FieldBasis(const FieldSpec& spec, std::vector<FieldElement> elements);

    int size() const { return static_cast<int>(elements_.size()); }
    const FieldElement& operator[](int i) const { return elements_[static_cast<size_t>(i)]; }
    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElement>& elements() const { return elements_; }

    /// Coefficients (x_1, ..., x_n) over GF(2) with x = sum x_i b_i,
    /// computed as x_i = trace(x * b*_i).
    std::vector<int> expand(const FieldElement& x) const;

    /// Reassemble an element from its coefficient vector.
    FieldElement combine(const std::vector<int>& coeffs) const;

    bool is_self_dual() const;
    bool operator==(const FieldBasis& o) const;

  private:
    FieldSpec spec_;
    std::vector<FieldElement> elements_;
    std::vector<unsigned> dual_bits_;

    friend FieldBasis dual_basis(const FieldBasis&);
};

/// The dual basis B* with trace(b_i * b*_j) = delta_ij.
FieldBasis dual_basis(const FieldBasis& basis);

/// Deterministic self-dual basis: the lexicographically smallest ascending
/// mask tuple (b_1 < b_2 < ... < b_n) with trace(b_i b_j) = delta_ij, found
/// by backtracking over element masks.
FieldBasis find_self_dual_basis(const FieldSpec& spec);

/// True iff x^2 + a x + b has no root in the field (exhaustive evaluation).
bool is_irreducible_quadratic(const FieldElement& a, const FieldElement& b);

/// True iff x^2 + x + b is irreducible and its companion matrix
/// [[1, b], [1, 0]] has multiplicative order exactly d^2 - 1.
bool is_primitive_quadratic(const FieldElement& b);

} // namespace dps

#endif
