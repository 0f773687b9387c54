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

#include "dps/field.hpp"

#include <algorithm>
#include <array>

namespace dps {

namespace {

int poly_degree(unsigned mask) {
    int deg = -1;
    for (int i = 0; i < 32; i++) {
        if (mask >> i & 1u) deg = i;
    }
    return deg;
}

// Carry-less product of two GF(2) polynomials.
unsigned poly_mul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; poly_degree(b >> i) >= 0; i++) {
        if (b >> i & 1u) r ^= a << i;
    }
    return r;
}

// Remainder of a modulo m (m nonzero).
unsigned poly_mod(unsigned a, unsigned m) {
    int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) {
        throw Error(ErrorCode::spec_mismatch, "field elements belong to different fields");
    }
}

} // namespace

bool is_irreducible_poly(unsigned mask) {
    int deg = poly_degree(mask);
    if (deg < 1) return false;
    // Trial division by every polynomial of degree 1 .. deg/2.
    for (unsigned div = 2; poly_degree(div) <= deg / 2; div++) {
        if (poly_mod(mask, div) == 0) return false;
    }
    return true;
}

unsigned default_modulus(int n) {
    if (n == 3) return 0b1101; // x^3 + x^2 + 1, so that b^3 = b^2 + 1
    for (unsigned mask = 1u << n; mask < (2u << n); mask++) {
        if (is_irreducible_poly(mask)) return mask;
    }
    throw Error(ErrorCode::invalid_argument, "no irreducible modulus of degree " + std::to_string(n));
}

FieldSpec::FieldSpec(int n_, unsigned modulus_bits) : n(n_), modulus(modulus_bits) {
    if (n < 1 || n > 8) {
        throw Error(ErrorCode::invalid_argument, "field degree must be in 1..8, got " + std::to_string(n));
    }
    if (poly_degree(modulus) != n) {
        throw Error(ErrorCode::invalid_argument, "modulus mask must have degree exactly n");
    }
    if (!is_irreducible_poly(modulus)) {
        throw Error(ErrorCode::invalid_argument, "modulus polynomial is reducible");
    }
}

FieldSpec FieldSpec::standard(int n_) { return FieldSpec(n_, default_modulus(n_)); }

FieldElement::FieldElement(const FieldSpec& spec, unsigned bits) : spec_(spec), bits_(bits) {
    if (bits_ >= (1u << spec_.n)) {
        throw Error(ErrorCode::invalid_argument, "element mask out of range for field");
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    return FieldElement(spec_, bits_ ^ rhs.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    return FieldElement(spec_, poly_mod(poly_mul(bits_, rhs.bits_), spec_.modulus));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    return bits_ == rhs.bits_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement acc = one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        throw Error(ErrorCode::division_by_zero, "zero has no multiplicative inverse");
    }
    // x^(d-2) = x^(-1) in a field of d elements.
    return pow(static_cast<std::uint64_t>(spec_.dim()) - 2);
}

FieldElement trace(const FieldElement& x) {
    FieldElement acc = x;
    FieldElement term = x;
    for (int i = 1; i < x.spec().n; i++) {
        term = term * term;
        acc = acc + term;
    }
    return acc;
}

std::vector<FieldElement> all_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(spec.dim()));
    for (int m = 0; m < spec.dim(); m++) {
        out.emplace_back(spec, static_cast<unsigned>(m));
    }
    return out;
}

namespace {

// Invert an n x n GF(2) matrix given as row bitmasks; returns empty on
// singular input.
std::vector<unsigned> gf2_invert(std::vector<unsigned> rows, int n) {
    std::vector<unsigned> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) inv[static_cast<size_t>(i)] = 1u << i;
    for (int col = 0; col < n; col++) {
        int pivot = -1;
        for (int r = col; r < n; r++) {
            if (rows[static_cast<size_t>(r)] >> col & 1u) { pivot = r; break; }
        }
        if (pivot < 0) return {};
        std::swap(rows[static_cast<size_t>(col)], rows[static_cast<size_t>(pivot)]);
        std::swap(inv[static_cast<size_t>(col)], inv[static_cast<size_t>(pivot)]);
        for (int r = 0; r < n; r++) {
            if (r != col && (rows[static_cast<size_t>(r)] >> col & 1u)) {
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(col)];
                inv[static_cast<size_t>(r)] ^= inv[static_cast<size_t>(col)];
            }
        }
    }
    return inv;
}

} // namespace

FieldBasis::FieldBasis(const FieldSpec& spec, std::vector<FieldElement> elements)
    : spec_(spec), elements_(std::move(elements)) {
    const int n = spec_.n;
    if (static_cast<int>(elements_.size()) != n) {
        throw Error(ErrorCode::invalid_argument, "basis must have exactly n elements");
    }
    for (const auto& e : elements_) require_same_spec(spec_, e.spec());

    // Independence check and dual computation share one GF(2) system:
    // M[i][k] = trace(b_i * e_k) over the unit masks e_k; the dual masks are
    // the columns of M^(-1).
    std::vector<unsigned> m(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; i++) {
        for (int k = 0; k < n; k++) {
            FieldElement ek(spec_, 1u << k);
            if (trace(elements_[static_cast<size_t>(i)] * ek).bits()) {
                m[static_cast<size_t>(i)] |= 1u << k;
            }
        }
    }
    std::vector<unsigned> minv = gf2_invert(m, n);
    if (minv.empty()) {
        throw Error(ErrorCode::invalid_argument, "basis elements are linearly dependent");
    }
    dual_bits_.assign(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; j++) {
        for (int k = 0; k < n; k++) {
            if (minv[static_cast<size_t>(k)] >> j & 1u) dual_bits_[static_cast<size_t>(j)] |= 1u << k;
        }
    }
}

std::vector<int> FieldBasis::expand(const FieldElement& x) const {
    require_same_spec(spec_, x.spec());
    std::vector<int> coeffs(static_cast<size_t>(size()));
    for (int i = 0; i < size(); i++) {
        FieldElement dual_i(spec_, dual_bits_[static_cast<size_t>(i)]);
        coeffs[static_cast<size_t>(i)] = static_cast<int>(trace(x * dual_i).bits());
    }
    return coeffs;
}

FieldElement FieldBasis::combine(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != size()) {
        throw Error(ErrorCode::invalid_argument, "coefficient count does not match basis size");
    }
    FieldElement acc(spec_, 0);
    for (int i = 0; i < size(); i++) {
        if (coeffs[static_cast<size_t>(i)] & 1) acc = acc + elements_[static_cast<size_t>(i)];
    }
    return acc;
}

bool FieldBasis::is_self_dual() const {
    for (int i = 0; i < size(); i++) {
        if (dual_bits_[static_cast<size_t>(i)] != elements_[static_cast<size_t>(i)].bits()) return false;
    }
    return true;
}

bool FieldBasis::operator==(const FieldBasis& o) const {
    if (spec_ != o.spec_ || elements_.size() != o.elements_.size()) return false;
    for (size_t i = 0; i < elements_.size(); i++) {
        if (elements_[i].bits() != o.elements_[i].bits()) return false;
    }
    return true;
}

FieldBasis dual_basis(const FieldBasis& basis) {
    std::vector<FieldElement> duals;
    duals.reserve(basis.dual_bits_.size());
    for (unsigned bits : basis.dual_bits_) {
        duals.emplace_back(basis.spec(), bits);
    }
    return FieldBasis(basis.spec(), std::move(duals));
}

namespace {

bool extend_self_dual(const FieldSpec& spec, std::vector<unsigned>& picked, int n) {
    if (static_cast<int>(picked.size()) == n) return true;
    unsigned start = picked.empty() ? 1 : picked.back() + 1;
    for (unsigned cand = start; cand < (1u << n); cand++) {
        FieldElement c(spec, cand);
        if (trace(c * c).bits() != 1) continue;
        bool ok = true;
        for (unsigned prev : picked) {
            if (trace(c * FieldElement(spec, prev)).bits() != 0) { ok = false; break; }
        }
        if (!ok) continue;
        picked.push_back(cand);
        if (extend_self_dual(spec, picked, n)) return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

FieldBasis find_self_dual_basis(const FieldSpec& spec) {
    // Trace-orthonormal sets of size n are automatically independent, so the
    // backtracking only has to enforce the Gram conditions.
    std::vector<unsigned> picked;
    if (!extend_self_dual(spec, picked, spec.n)) {
        throw Error(ErrorCode::invalid_argument, "no self-dual basis found");
    }
    std::vector<FieldElement> elems;
    for (unsigned bits : picked) elems.emplace_back(spec, bits);
    return FieldBasis(spec, std::move(elems));
}

bool is_irreducible_quadratic(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a.spec(), b.spec());
    for (const auto& x : all_elements(a.spec())) {
        if ((x * x + a * x + b).is_zero()) return false;
    }
    return true;
}

bool is_primitive_quadratic(const FieldElement& b) {
    const FieldSpec& spec = b.spec();
    if (!is_irreducible_quadratic(FieldElement(spec, 1), b)) return false;
    // Multiplicative order of the companion matrix [[1, b], [1, 0]], by
    // explicit powering; primitive means order d^2 - 1 exactly.
    const std::uint64_t full = static_cast<std::uint64_t>(spec.dim()) * spec.dim() - 1;
    FieldElement m00 = b.one(), m01 = b, m10 = b.one(), m11 = b.zero();
    std::uint64_t k = 1;
    while (!(m00.bits() == 1 && m01.bits() == 0 && m10.bits() == 0 && m11.bits() == 1)) {
        FieldElement n00 = m00 + m01, n01 = m00 * b;
        FieldElement n10 = m10 + m11, n11 = m10 * b;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
        if (++k > full) return false;
    }
    return k == full;
}

} // namespace dps
