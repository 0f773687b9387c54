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

#include "dps/pauli.hpp"

#include <cmath>
#include <cstdlib>

namespace dps {

CMatrix pauli_i() { return CMatrix::from_rows({{1, 0}, {0, 1}}); }
CMatrix pauli_x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }
CMatrix pauli_y() { return CMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}}); }
CMatrix pauli_z() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }

int ket_index(const std::vector<int>& coeffs) {
    int idx = 0;
    for (int c : coeffs) idx = (idx << 1) | (c & 1);
    return idx;
}

TranslationOperator translation(const PhasePoint& v, const FieldBasis& basis_q) {
    if (v.spec() != basis_q.spec()) {
        throw Error(ErrorCode::spec_mismatch, "point and basis from different fields");
    }
    FieldBasis basis_p = dual_basis(basis_q);
    std::vector<int> qc = basis_q.expand(v.q);
    std::vector<int> pc = basis_p.expand(v.p);

    CMatrix m = CMatrix::identity(1);
    for (int i = 0; i < basis_q.size(); i++) {
        CMatrix factor = pauli_i();
        if (qc[static_cast<size_t>(i)]) factor = pauli_x();
        if (pc[static_cast<size_t>(i)]) factor = factor * pauli_z();
        m = kron(m, factor);
    }
    return TranslationOperator{v, std::move(m), basis_q, std::move(basis_p)};
}

TranslationSet::TranslationSet(const FieldSpec& spec, const FieldBasis& basis_q)
    : spec_(spec), basis_q_(basis_q) {
    const int d = spec.dim();
    mats_.reserve(static_cast<size_t>(d) * d);
    for (int q = 0; q < d; q++) {
        for (int p = 0; p < d; p++) {
            PhasePoint v(FieldElement(spec, static_cast<unsigned>(q)),
                         FieldElement(spec, static_cast<unsigned>(p)));
            mats_.push_back(translation(v, basis_q).matrix);
        }
    }
}

const CMatrix& TranslationSet::at(unsigned q_bits, unsigned p_bits) const {
    return mats_[static_cast<size_t>(q_bits) * spec_.dim() + p_bits];
}

const CMatrix& TranslationSet::at(const PhasePoint& v) const {
    return at(v.q.bits(), v.p.bits());
}

namespace {

// Ratio b = s * a at the largest entry of a, with a full proportionality
// check; throws if b is not proportional to a.
Complex proportionality(const CMatrix& a, const CMatrix& b, double tol) {
    int bi = 0, bj = 0;
    double best = 0.0;
    for (int i = 0; i < a.dim(); i++) {
        for (int j = 0; j < a.dim(); j++) {
            if (std::abs(a.at(i, j)) > best) { best = std::abs(a.at(i, j)); bi = i; bj = j; }
        }
    }
    if (best == 0.0) {
        throw Error(ErrorCode::validation, "proportionality against the zero matrix");
    }
    Complex s = b.at(bi, bj) / a.at(bi, bj);
    if (b.max_abs_diff(a.scaled(s)) > tol) {
        throw Error(ErrorCode::validation, "matrices are not proportional");
    }
    return s;
}

} // namespace

int weyl_commutation_sign(const PhasePoint& u, const PhasePoint& v, const FieldBasis& basis_q) {
    if (u.spec() != v.spec()) {
        throw Error(ErrorCode::spec_mismatch, "points from different fields");
    }
    CMatrix tu = translation(u, basis_q).matrix;
    CMatrix tv = translation(v, basis_q).matrix;
    Complex s = proportionality(tv * tu, tu * tv, 1e-10);
    int sign = s.real() > 0.0 ? 1 : -1;
    if (std::abs(s - Complex(sign, 0)) > 1e-10) {
        throw Error(ErrorCode::validation, "commutation phase is not a sign");
    }
    return sign;
}

// ---------------------------------------------------------------------------
// Clifford synthesis.
//
// The field-linear map acts GF(2)-linearly on the binary coordinate vectors
// (q_1..q_n | p_1..p_n) picked out by basisQ and its dual, giving a 2n x 2n
// symplectic matrix over GF(2).  That matrix is factored into symplectic
// transvections v -> v + <v,h> h, and each transvection is realized on the
// state space by (I + i P_h)/sqrt(2) with P_h the Hermitian Pauli string of
// the binary vector h.
// ---------------------------------------------------------------------------

namespace {

struct BinVec {
    unsigned x = 0, z = 0;
    bool operator==(const BinVec& o) const { return x == o.x && z == o.z; }
    bool operator!=(const BinVec& o) const { return !(*this == o); }
    BinVec operator^(const BinVec& o) const { return BinVec{x ^ o.x, z ^ o.z}; }
    bool is_zero() const { return x == 0 && z == 0; }
};

int parity(unsigned m) { return __builtin_popcount(m) & 1; }

// Binary symplectic pairing; 1 means the Pauli strings anticommute.
int pairing(const BinVec& u, const BinVec& v) {
    return parity(u.x & v.z) ^ parity(u.z & v.x);
}

// Hermitian Pauli string of a binary vector: per qubit I, X, Z, or Y.
CMatrix hermitian_pauli(const BinVec& h, int n) {
    CMatrix m = CMatrix::identity(1);
    for (int i = 0; i < n; i++) {
        int xb = h.x >> i & 1u, zb = h.z >> i & 1u;
        if (xb && zb) m = kron(m, pauli_y());
        else if (xb) m = kron(m, pauli_x());
        else if (zb) m = kron(m, pauli_z());
        else m = kron(m, pauli_i());
    }
    return m;
}

std::vector<BinVec> symplectic_of_map(const LinearMap& map, const FieldBasis& basis_q,
                                      const FieldBasis& basis_p) {
    const int n = basis_q.size();
    const FieldSpec& spec = basis_q.spec();
    auto column_of = [&](const PhasePoint& pt) {
        PhasePoint img = map.apply(pt);
        std::vector<int> qc = basis_q.expand(img.q);
        std::vector<int> pc = basis_p.expand(img.p);
        BinVec col;
        for (int i = 0; i < n; i++) {
            col.x |= static_cast<unsigned>(qc[static_cast<size_t>(i)]) << i;
            col.z |= static_cast<unsigned>(pc[static_cast<size_t>(i)]) << i;
        }
        return col;
    };
    std::vector<BinVec> cols;
    cols.reserve(2 * static_cast<size_t>(n));
    FieldElement zero(spec, 0);
    for (int i = 0; i < n; i++) cols.push_back(column_of(PhasePoint(basis_q[i], zero)));
    for (int i = 0; i < n; i++) cols.push_back(column_of(PhasePoint(zero, basis_p[i])));
    return cols;
}

// Factor the symplectic matrix into transvections: returns h_1, ..., h_m with
// S = T_{h_1} T_{h_2} ... T_{h_m}.
std::vector<BinVec> transvection_factorization(std::vector<BinVec> cols, int n) {
    std::vector<BinVec> factors;
    auto apply = [&](const BinVec& h) {
        if (h.is_zero()) return;
        for (auto& c : cols) {
            if (pairing(c, h)) c = c ^ h;
        }
        factors.push_back(h);
    };
    for (int j = 0; j < n; j++) {
        BinVec ej{1u << j, 0};
        BinVec fj{0, 1u << j};
        // Map column j onto ej.
        BinVec u = cols[static_cast<size_t>(j)];
        if (u != ej) {
            if (pairing(u, ej)) {
                apply(u ^ ej);
            } else {
                // Midpoint w supported on qubits >= j pairing with both.
                BinVec w;
                bool found = false;
                for (unsigned xm = 0; xm < (1u << (n - j)) && !found; xm++) {
                    for (unsigned zm = 0; zm < (1u << (n - j)) && !found; zm++) {
                        BinVec cand{xm << j, zm << j};
                        if (pairing(u, cand) && pairing(cand, ej)) { w = cand; found = true; }
                    }
                }
                if (!found) {
                    throw Error(ErrorCode::validation, "symplectic factorization failed");
                }
                apply(u ^ w);
                apply(w ^ ej);
            }
        }
        // Map column n+j onto fj without moving ej; <ej, v> = 1 already.
        BinVec v = cols[static_cast<size_t>(n + j)];
        if (v != fj) {
            if (pairing(v, fj)) {
                apply(v ^ fj);
            } else {
                BinVec w = ej ^ fj;
                apply(v ^ w);
                apply(w ^ fj);
            }
        }
    }
    for (int j = 0; j < 2 * n; j++) {
        BinVec want = (j < n) ? BinVec{1u << j, 0} : BinVec{0, 1u << (j - n)};
        if (cols[static_cast<size_t>(j)] != want) {
            throw Error(ErrorCode::validation, "symplectic reduction did not reach identity");
        }
    }
    // The applied list reduces S to I from the left, so S itself is the
    // product of the (involutive) transvections in application order.
    return factors;
}

} // namespace

CliffordUnitary clifford_for(const LinearMap& map, const FieldBasis& basis_q) {
    if (map.spec() != basis_q.spec()) {
        throw Error(ErrorCode::spec_mismatch, "map and basis from different fields");
    }
    if (map.det().bits() != 1) {
        throw Error(ErrorCode::precondition, "only unit-determinant maps have an associated unitary");
    }
    const int n = basis_q.spec().n;
    const int d = basis_q.spec().dim();
    FieldBasis basis_p = dual_basis(basis_q);

    std::vector<BinVec> cols = symplectic_of_map(map, basis_q, basis_p);
    std::vector<BinVec> factors = transvection_factorization(cols, n);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CMatrix u = CMatrix::identity(d);
    for (const auto& h : factors) {
        CMatrix ph = hermitian_pauli(h, n);
        u = u * (CMatrix::identity(d) + ph.scaled(Complex(0, 1))).scaled(inv_sqrt2);
    }

    // Fix the Pauli gauge: conjugation must send each generator's Hermitian
    // string to its target with sign +1.
    CMatrix udag = u.adjoint();
    unsigned mx = 0, mz = 0;
    for (int j = 0; j < 2 * n; j++) {
        BinVec gen = (j < n) ? BinVec{1u << j, 0} : BinVec{0, 1u << (j - n)};
        CMatrix image = u * hermitian_pauli(gen, n) * udag;
        CMatrix target = hermitian_pauli(cols[static_cast<size_t>(j)], n);
        Complex s = proportionality(target, image, 1e-9);
        if (std::abs(s.imag()) > 1e-9 || std::abs(std::abs(s.real()) - 1.0) > 1e-9) {
            throw Error(ErrorCode::validation, "synthesized conjugation sign is not +-1");
        }
        if (s.real() < 0.0) {
            if (j < n) mz |= 1u << j;
            else mx |= 1u << (j - n);
        }
    }
    if (mx || mz) {
        u = u * hermitian_pauli(BinVec{mx, mz}, n);
    }

    // Global phase: first nonzero entry real positive.
    for (int i = 0; i < d * d; i++) {
        Complex e = u.at(i / d, i % d);
        if (std::abs(e) > 1e-9) {
            u = u.scaled(std::conj(e) / std::abs(e));
            break;
        }
    }
    return CliffordUnitary{std::move(u), map};
}

CliffordUnitary canonical_rotation_unitary(const LinearMap& rotation, const FieldBasis& basis_q) {
    CliffordUnitary u = clifford_for(rotation, basis_q);
    const FieldSpec& spec = basis_q.spec();
    const int d = spec.dim();

    if (!basis_q.is_self_dual()) return u;
    // Smallest power of R equal to the qubit-wise companion [[1, 1], [1, 0]].
    LinearMap companion(FieldElement(spec, 1), FieldElement(spec, 1),
                        FieldElement(spec, 1), FieldElement(spec, 0));
    int j = 0;
    LinearMap rk = rotation;
    for (int k = 1; k <= d; k++) {
        if (rk == companion) { j = k; break; }
        rk = rk * rotation;
    }
    if (j == 0) return u;

    // The local unitary realizing the companion in self-dual coordinates: the
    // n-fold tensor power of the one-qubit cycle Z -> X -> Y.
    FieldSpec spec1 = FieldSpec::standard(1);
    FieldBasis basis1(spec1, {FieldElement(spec1, 1)});
    CMatrix w1 = clifford_for(LinearMap(FieldElement(spec1, 1), FieldElement(spec1, 1),
                                        FieldElement(spec1, 1), FieldElement(spec1, 0)),
                              basis1).matrix;
    CMatrix local = CMatrix::identity(1);
    for (int i = 0; i < spec.n; i++) local = kron(local, w1);

    TranslationSet translations(spec, basis_q);
    for (int m = 0; m < d * d; m++) {
        CMatrix cand = u.matrix * translations.at(static_cast<unsigned>(m / d),
                                                  static_cast<unsigned>(m % d));
        CMatrix power = cand.pow_int(j);
        Complex s = local.inner(power) / static_cast<double>(d);
        if (std::abs(std::abs(s) - 1.0) > 1e-8) continue;
        if (power.max_abs_diff(local.scaled(s)) > 1e-8) continue;
        for (int i = 0; i < d * d; i++) {
            Complex e = cand.at(i / d, i % d);
            if (std::abs(e) > 1e-9) {
                cand = cand.scaled(std::conj(e) / std::abs(e));
                break;
            }
        }
        return CliffordUnitary{std::move(cand), rotation};
    }
    return u;
}

std::pair<PhasePoint, Complex> conjugation_image(const CMatrix& u, const PhasePoint& v,
                                                 const TranslationSet& translations) {
    const FieldSpec& spec = translations.spec();
    const int d = spec.dim();
    if (!u.is_unitary(1e-8)) {
        throw Error(ErrorCode::precondition, "conjugation requires a unitary matrix");
    }
    CMatrix image = u * translations.at(v) * u.adjoint();
    for (int q = 0; q < d; q++) {
        for (int p = 0; p < d; p++) {
            Complex overlap = translations.at(static_cast<unsigned>(q), static_cast<unsigned>(p))
                                  .inner(image) / static_cast<double>(d);
            if (std::abs(std::abs(overlap) - 1.0) < 1e-8) {
                PhasePoint w(FieldElement(spec, static_cast<unsigned>(q)),
                             FieldElement(spec, static_cast<unsigned>(p)));
                return {w, overlap};
            }
        }
    }
    throw Error(ErrorCode::not_clifford, "conjugation image is not a translation operator");
}

std::pair<PhasePoint, Complex> conjugation_image(const CMatrix& u, const PhasePoint& v,
                                                 const FieldBasis& basis_q) {
    return conjugation_image(u, v, TranslationSet(v.spec(), basis_q));
}

} // namespace dps
