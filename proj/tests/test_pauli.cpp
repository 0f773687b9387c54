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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dps/pauli.hpp"
#include "dps/random.hpp"

using namespace dps;

namespace {

PhasePoint pt(const FieldSpec& spec, unsigned q, unsigned p) {
    return PhasePoint(FieldElement(spec, q), FieldElement(spec, p));
}

// Commutation sign from the trace pairing: T_u and T_v commute exactly when
// tr(q_u p_v + p_u q_v) = 0.  Independent of the matrix route.
int sign_oracle(const PhasePoint& u, const PhasePoint& v) {
    FieldElement pairing = trace(u.q * v.p + u.p * v.q);
    return pairing.bits() == 0 ? 1 : -1;
}

} // namespace

TEST_CASE("pauli matrix identities") {
    CMatrix x = pauli_x(), y = pauli_y(), z = pauli_z(), id = pauli_i();
    CHECK((x * x).max_abs_diff(id) == 0.0);
    CHECK((x * z + z * x).max_abs() == 0.0); // XZ = -ZX
    CHECK(((x * z) * (x * z)).max_abs_diff(id.scaled(-1.0)) == 0.0);
    CHECK((x * z).max_abs_diff(y.scaled(Complex(0, -1))) < 1e-15); // Y = i XZ
}

TEST_CASE("ket indexing is big-endian in qubits") {
    CHECK(ket_index({0, 0}) == 0);
    CHECK(ket_index({0, 1}) == 1);
    CHECK(ket_index({1, 0}) == 2);
    CHECK(ket_index({1, 0, 1}) == 5);
}

TEST_CASE("translation operators") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis(gf4, {FieldElement(gf4, 2), FieldElement(gf4, 3)});

    CHECK(translation(pt(gf4, 0, 0), basis).matrix.max_abs_diff(CMatrix::identity(4)) == 0.0);

    // (1, 0) expands to (1,1) giving X x X.
    CMatrix xx = kron(pauli_x(), pauli_x());
    CHECK(translation(pt(gf4, 1, 0), basis).matrix.max_abs_diff(xx) == 0.0);

    // (1, w+1): p = w+1 has dual coordinates (0,1), giving X x XZ.
    CMatrix xxz = kron(pauli_x(), pauli_x() * pauli_z());
    CHECK(translation(pt(gf4, 1, 3), basis).matrix.max_abs_diff(xxz) == 0.0);

    TranslationOperator top = translation(pt(gf4, 2, 1), basis);
    CHECK(top.basis_p == dual_basis(basis));
    CHECK(top.matrix.is_unitary(1e-12));
}

TEST_CASE("translation set covers the pauli strings") {
    for (int n : {1, 2, 3}) {
        FieldSpec spec = FieldSpec::standard(n);
        FieldBasis basis = find_self_dual_basis(spec);
        TranslationSet set(spec, basis);
        const int d = spec.dim();
        for (int q = 0; q < d; q++) {
            for (int p = 0; p < d; p++) {
                const CMatrix& t = set.at(static_cast<unsigned>(q), static_cast<unsigned>(p));
                CHECK(t.is_unitary(1e-12));
                CMatrix sq = t * t;
                double dev = std::min(sq.max_abs_diff(CMatrix::identity(d)),
                                      sq.max_abs_diff(CMatrix::identity(d).scaled(-1.0)));
                CHECK(dev < 1e-12); // squares to +-I
            }
        }
    }
}

TEST_CASE("translations compose projectively") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis = find_self_dual_basis(gf4);
    TranslationSet set(gf4, basis);
    for (int a = 0; a < 16; a++) {
        for (int b = 0; b < 16; b++) {
            PhasePoint u = pt(gf4, static_cast<unsigned>(a / 4), static_cast<unsigned>(a % 4));
            PhasePoint v = pt(gf4, static_cast<unsigned>(b / 4), static_cast<unsigned>(b % 4));
            CMatrix product = set.at(u) * set.at(v);
            const CMatrix& target = set.at(u + v);
            // The phase must be a fourth root of unity.
            bool matched = false;
            for (int k = 0; k < 4; k++) {
                Complex phase = std::polar(1.0, k * 3.14159265358979323846 / 2.0);
                if (product.max_abs_diff(target.scaled(phase)) < 1e-12) matched = true;
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("translations compose projectively at three qubits") {
    FieldSpec gf8 = FieldSpec::standard(3);
    FieldBasis basis = find_self_dual_basis(gf8);
    TranslationSet set(gf8, basis);
    Rng rng(19);
    for (int t = 0; t < 25; t++) {
        PhasePoint u = pt(gf8, static_cast<unsigned>(rng.bits() % 8),
                          static_cast<unsigned>(rng.bits() % 8));
        PhasePoint v = pt(gf8, static_cast<unsigned>(rng.bits() % 8),
                          static_cast<unsigned>(rng.bits() % 8));
        CMatrix product = set.at(u) * set.at(v);
        bool matched = false;
        for (int k = 0; k < 4; k++) {
            Complex phase = std::polar(1.0, k * 3.14159265358979323846 / 2.0);
            if (product.max_abs_diff(set.at(u + v).scaled(phase)) < 1e-12) matched = true;
        }
        CHECK(matched);
    }
}

TEST_CASE("commutation signs") {
    FieldSpec gf2 = FieldSpec::standard(1);
    FieldBasis basis2 = find_self_dual_basis(gf2);
    CHECK(weyl_commutation_sign(pt(gf2, 1, 0), pt(gf2, 0, 1), basis2) == -1);
    CHECK(weyl_commutation_sign(pt(gf2, 1, 0), pt(gf2, 1, 0), basis2) == 1);

    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis4 = find_self_dual_basis(gf4);
    CHECK(weyl_commutation_sign(pt(gf4, 1, 0), pt(gf4, 2, 0), basis4) == 1);

    // Exhaustive n <= 2 against the trace-pairing oracle, plus the collinear
    // characterization.
    for (int a = 0; a < 16; a++) {
        for (int b = 0; b < 16; b++) {
            PhasePoint u = pt(gf4, static_cast<unsigned>(a / 4), static_cast<unsigned>(a % 4));
            PhasePoint v = pt(gf4, static_cast<unsigned>(b / 4), static_cast<unsigned>(b % 4));
            int sign = weyl_commutation_sign(u, v, basis4);
            CHECK(sign == sign_oracle(u, v));
            // Collinear through the origin (u = c v or either is zero) must
            // commute.
            bool collinear = u.is_origin() || v.is_origin();
            for (const auto& c : all_elements(gf4)) {
                if (!v.is_origin() && u.q == c * v.q && u.p == c * v.p) collinear = true;
            }
            if (collinear) CHECK(sign == 1);
        }
    }
}

TEST_CASE("clifford synthesis on one qubit") {
    FieldSpec gf2 = FieldSpec::standard(1);
    FieldBasis basis = find_self_dual_basis(gf2);
    LinearMap r = primitive_rotation(FieldElement(gf2, 1));
    CliffordUnitary u = clifford_for(r, basis);
    CHECK(u.matrix.is_unitary(1e-12));
    // The gauge pins the cycle Z -> X -> Y with plus signs.
    CHECK((u.matrix * pauli_z() * u.matrix.adjoint()).max_abs_diff(pauli_x()) < 1e-12);
    CHECK((u.matrix * pauli_x() * u.matrix.adjoint()).max_abs_diff(pauli_y()) < 1e-12);
    CHECK((u.matrix * pauli_y() * u.matrix.adjoint()).max_abs_diff(pauli_z()) < 1e-12);
}

TEST_CASE("clifford synthesis matches the point map") {
    for (int n : {1, 2, 3}) {
        FieldSpec spec = FieldSpec::standard(n);
        FieldBasis basis = find_self_dual_basis(spec);
        FieldElement b(spec, 0);
        for (const auto& cand : all_elements(spec)) {
            if (is_primitive_quadratic(cand)) { b = cand; break; }
        }
        LinearMap r = primitive_rotation(b);
        CliffordUnitary u = clifford_for(r, basis);
        TranslationSet set(spec, basis);
        const int d = spec.dim();
        for (int q = 0; q < d; q++) {
            for (int p = 0; p < d; p++) {
                PhasePoint v = pt(spec, static_cast<unsigned>(q), static_cast<unsigned>(p));
                auto [w, phase] = conjugation_image(u.matrix, v, set);
                CHECK(w == r.apply(v));
                CHECK(std::abs(std::abs(phase) - 1.0) < 1e-10);
            }
        }
        // Finite order: U^(d+1) proportional to the identity.
        CMatrix power = u.matrix.pow_int(d + 1);
        Complex c = power.at(0, 0);
        CHECK(std::abs(std::abs(c) - 1.0) < 1e-10);
        CHECK(power.max_abs_diff(CMatrix::identity(d).scaled(c)) < 1e-9);
    }
}

TEST_CASE("clifford synthesis composes") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis = find_self_dual_basis(gf4);
    TranslationSet set(gf4, basis);
    LinearMap r = primitive_rotation(FieldElement(gf4, 2));
    LinearMap r2 = r * r;
    LinearMap r3 = r2 * r;
    CliffordUnitary u = clifford_for(r, basis);
    CliffordUnitary u2 = clifford_for(r2, basis);
    CMatrix product = u.matrix * u2.matrix;
    for (int q = 0; q < 4; q++) {
        for (int p = 0; p < 4; p++) {
            PhasePoint v = pt(gf4, static_cast<unsigned>(q), static_cast<unsigned>(p));
            auto [w, phase] = conjugation_image(product, v, set);
            (void)phase;
            CHECK(w == r3.apply(v));
        }
    }
}

TEST_CASE("clifford synthesis is deterministic and validates input") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis = find_self_dual_basis(gf4);
    LinearMap r = primitive_rotation(FieldElement(gf4, 2));
    CHECK(clifford_for(r, basis).matrix == clifford_for(r, basis).matrix);

    // det = w is not 1: no associated unitary.
    LinearMap bad(FieldElement(gf4, 2), FieldElement(gf4, 0), FieldElement(gf4, 0),
                  FieldElement(gf4, 1));
    CHECK_THROWS_AS(clifford_for(bad, basis), Error);
}

TEST_CASE("conjugation image identification") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis = find_self_dual_basis(gf4);
    TranslationSet set(gf4, basis);

    auto [w, phase] = conjugation_image(CMatrix::identity(4), pt(gf4, 2, 1), set);
    CHECK(w == pt(gf4, 2, 1));
    CHECK(std::abs(phase - Complex(1, 0)) < 1e-12);

    auto [w0, phase0] = conjugation_image(CMatrix::identity(4), pt(gf4, 0, 0), set);
    CHECK(w0 == pt(gf4, 0, 0));
    CHECK(std::abs(phase0 - Complex(1, 0)) < 1e-12);

    // A non-Clifford unitary: T-like phase on one qubit.
    CMatrix t = kron(CMatrix::from_rows({{1, 0}, {0, std::polar(1.0, 0.25 * 3.14159265)}}),
                     pauli_i());
    CHECK_THROWS_AS(conjugation_image(t, pt(gf4, 1, 0), set), Error);
}

TEST_CASE("canonical rotation unitary") {
    // n = 1: identical action to the plain synthesis.
    FieldSpec gf2 = FieldSpec::standard(1);
    FieldBasis basis2 = find_self_dual_basis(gf2);
    LinearMap r2 = primitive_rotation(FieldElement(gf2, 1));
    CHECK(canonical_rotation_unitary(r2, basis2).matrix.max_abs_diff(
              clifford_for(r2, basis2).matrix) < 1e-12);

    // n = 3 reference rotation: the third power becomes the local cycle.
    FieldSpec gf8(3, 0b1101);
    FieldBasis basis8 = find_self_dual_basis(gf8);
    FieldElement b(gf8, 2);
    LinearMap r8(b.pow(3), b.pow(6), b.pow(6), b.pow(5));
    CliffordUnitary u = canonical_rotation_unitary(r8, basis8);
    CMatrix w1 = clifford_for(r2, basis2).matrix;
    CMatrix local = kron(w1, kron(w1, w1));
    CMatrix cube = u.matrix.pow_int(3);
    Complex s = local.inner(cube) / 8.0;
    CHECK(std::abs(std::abs(s) - 1.0) < 1e-10);
    CHECK(cube.max_abs_diff(local.scaled(s)) < 1e-10);

    // Still realizes the rotation.
    TranslationSet set(gf8, basis8);
    for (unsigned q = 0; q < 8; q += 3) {
        for (unsigned p = 0; p < 8; p += 2) {
            auto [w, phase] = conjugation_image(u.matrix, pt(gf8, q, p), set);
            (void)phase;
            CHECK(w == r8.apply(pt(gf8, q, p)));
        }
    }
}
