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

#include "dps/pipeline.hpp"
#include "dps/random.hpp"
#include "dps/rotinv.hpp"

using namespace dps;

namespace {

Pipeline make_pipeline(int n) {
    RunConfig config;
    config.n = n;
    return Pipeline(config);
}

Pipeline reference_three_qubit() { return Pipeline(reproduce_config("three_qubit")); }

} // namespace

TEST_CASE("one-qubit family is the X+Y+Z eigenbasis") {
    Pipeline p = make_pipeline(1);
    const RotInvFamily& family = p.family();
    REQUIRE(family.members.size() == 2);
    CHECK_FALSE(family.degenerate);
    CHECK(family.members[0].label != family.members[1].label);

    CMatrix xyz = pauli_x() + pauli_y() + pauli_z();
    EigenSystem es = eigh(xyz);
    for (const auto& m : family.members) {
        double best = 0.0;
        for (int k = 0; k < 2; k++) {
            CVec v = {es.vectors.at(0, k), es.vectors.at(1, k)};
            best = std::max(best, std::norm(inner(v, m.state)));
        }
        CHECK(best > 1.0 - 1e-12);
    }
}

TEST_CASE("spectral projectors resolve the identity") {
    for (int n : {1, 2, 3}) {
        Pipeline p = make_pipeline(n);
        const int d = p.spec().dim();
        REQUIRE(static_cast<int>(p.family().members.size()) == d);
        CMatrix sum(d);
        for (const auto& m : p.family().members) {
            sum = sum + outer(m.state);
            CVec uv = p.unitary().matrix.apply(m.state);
            CHECK(norm(add(uv, scaled(m.state, -m.eigenvalue))) < 1e-9);
            // Labels map to eigenvalues on the root system.
            Complex expect = p.family().root *
                             std::polar(1.0, 2.0 * 3.14159265358979323846 * m.label / (d + 1));
            CHECK(std::abs(m.eigenvalue - expect) < 1e-12);
        }
        CHECK(sum.max_abs_diff(CMatrix::identity(d)) < 1e-9);
    }
}

TEST_CASE("projection handles the degenerate identity") {
    FieldSpec gf4 = FieldSpec::standard(2);
    CliffordUnitary id{CMatrix::identity(4), LinearMap::identity(gf4)};
    RotInvFamily family = eigenstates_by_projection(id);
    CHECK(family.degenerate);
    REQUIRE(family.members.size() == 4);
    for (const auto& m : family.members) CHECK(m.label == 0);
}

TEST_CASE("projection requires finite order") {
    FieldSpec gf2 = FieldSpec::standard(1);
    CMatrix bad = CMatrix::from_rows({{1, 0}, {0, std::polar(1.0, 0.4)}});
    CliffordUnitary u{bad, LinearMap::identity(gf2)};
    CHECK_THROWS_AS(eigenstates_by_projection(u), Error);
}

TEST_CASE("wigner constancy on circles") {
    Pipeline p1 = make_pipeline(1);
    ConstancyReport r1 = wigner_constancy_check(p1.family(), p1.net(), p1.form());
    CHECK(r1.max_deviation < 1e-12);
    REQUIRE(r1.circle_values.size() == 2);
    REQUIRE(r1.circle_values[0].size() == 1); // the only circle in the 2x2 space

    Pipeline p2 = make_pipeline(2);
    ConstancyReport r2 = wigner_constancy_check(p2.family(), p2.net(), p2.form());
    CHECK(r2.max_deviation < 1e-12);
}

TEST_CASE("positivity scan") {
    Pipeline p = make_pipeline(1);
    auto scan = positivity_scan(p.family(), p.net());
    int positive = 0;
    for (const auto& e : scan) {
        if (e.positive) positive++;
    }
    CHECK(positive == 1);

    // Control: the maximally mixed state is positive everywhere.
    WignerFunction w = wigner(p.net(), CMatrix::identity(2).scaled(0.5));
    CHECK(w.min_value() == doctest::Approx(0.25));
}

TEST_CASE("three-qubit reference family") {
    Pipeline p = reference_three_qubit();
    REQUIRE(p.family().members.size() == 8);

    ConstancyReport constancy = wigner_constancy_check(p.family(), p.net(), p.form());
    CHECK(constancy.max_deviation < 1e-12);

    auto scan = positivity_scan(p.family(), p.net());
    int positive = 0;
    for (const auto& e : scan) {
        if (e.positive) positive++;
    }
    CHECK(positive == 1);

    Eq14Result eq = build_eq14_state(p.family(), p.net());
    CHECK(eq.overlap > 1.0 - 1e-6);
    CHECK(eq.plus_overlap == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-9));
    CHECK(std::abs(eq.center_value - 0.319) < 0.0005);
    CHECK(eq.eigen_residual < 1e-6);
    CHECK(std::abs(norm(eq.state) - 1.0) < 1e-12);
}

TEST_CASE("reconstruction requires three qubits") {
    Pipeline p = make_pipeline(2);
    CHECK_THROWS_AS(build_eq14_state(p.family(), p.net()), Error);
}

TEST_CASE("coherent lattice") {
    Pipeline p = make_pipeline(2);
    Rng rng(7);
    CVec seed = rng.pure_state(4);
    auto lattice = coherent_lattice(seed, p.basis());
    REQUIRE(lattice.size() == 16);

    // The (0,0) entry is the seed itself.
    CHECK(norm(add(lattice[0].second, scaled(seed, -1.0))) < 1e-12);

    // Translates have point-permuted Wigner functions.
    WignerFunction w0 = wigner(p.net(), seed);
    for (const auto& [v, state] : lattice) {
        WignerFunction wv = wigner(p.net(), state);
        for (unsigned q = 0; q < 4; q++) {
            for (unsigned pp = 0; pp < 4; pp++) {
                CHECK(wv.at(q ^ v.q.bits(), pp ^ v.p.bits()) ==
                      doctest::Approx(w0.at(q, pp)).epsilon(1e-11));
            }
        }
    }

    CVec unnormalized(4, Complex(1.0, 0.0));
    CHECK_THROWS_AS(coherent_lattice(unnormalized, p.basis()), Error);
}

TEST_CASE("entropy minimality certificates") {
    Pipeline p1 = make_pipeline(1);
    auto entries = entropy_minimality_certificate(p1.family(), p1.mubs());
    REQUIRE(entries.size() == 2);
    for (const auto& e : entries) {
        CHECK(e.minimal);
        CHECK(e.average == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-12));
        CHECK(e.spread < 1e-12);
    }

    Pipeline p2 = make_pipeline(2);
    for (const auto& e : entropy_minimality_certificate(p2.family(), p2.mubs())) {
        CHECK(e.minimal);
        CHECK(e.average == doctest::Approx(std::log2(5.0) - 1.0).epsilon(1e-12));
    }
}
