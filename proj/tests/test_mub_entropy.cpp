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

#include "dps/mub_entropy.hpp"
#include "dps/pipeline.hpp"
#include "dps/random.hpp"

using namespace dps;

namespace {

Pipeline make_pipeline(int n, std::uint64_t seed = 0) {
    RunConfig config;
    config.n = n;
    config.seed = seed;
    return Pipeline(config);
}

} // namespace

TEST_CASE("one-qubit bases are the pauli eigenbases") {
    Pipeline p = make_pipeline(1);
    const MubSet& mubs = p.mubs();
    REQUIRE(mubs.num_bases() == 3);

    // Basis 0 is computational.
    CHECK(std::abs(std::abs(mubs.vec(0, 0)[0]) - 1.0) < 1e-12);
    CHECK(std::abs(mubs.vec(0, 0)[1]) < 1e-12);

    auto basis_matches = [&](int basis, const CMatrix& op) {
        for (int j = 0; j < 2; j++) {
            CVec v = mubs.vec(basis, j);
            CVec ov = op.apply(v);
            // Eigenvector: op v is parallel to v.
            Complex lambda = inner(v, ov);
            CVec diff = add(ov, scaled(v, -lambda));
            if (norm(diff) > 1e-10) return false;
        }
        return true;
    };
    CHECK(basis_matches(0, pauli_z()));
    int x_bases = 0, y_bases = 0;
    for (int basis = 1; basis < 3; basis++) {
        if (basis_matches(basis, pauli_x())) x_bases++;
        if (basis_matches(basis, pauli_y())) y_bases++;
    }
    CHECK(x_bases == 1);
    CHECK(y_bases == 1);
}

TEST_CASE("mub overlaps") {
    for (int n : {1, 2, 3}) {
        Pipeline p = make_pipeline(n);
        const MubSet& mubs = p.mubs();
        const int d = p.spec().dim();
        REQUIRE(mubs.num_bases() == d + 1);
        for (int i = 0; i < mubs.num_bases(); i++) {
            for (int j = 0; j < d; j++) {
                for (int k = 0; k < d; k++) {
                    double o = std::norm(inner(mubs.vec(i, j), mubs.vec(i, k)));
                    CHECK(std::abs(o - (j == k ? 1.0 : 0.0)) < 1e-12);
                }
            }
            for (int i2 = i + 1; i2 < mubs.num_bases(); i2++) {
                for (int j = 0; j < d; j++) {
                    for (int k = 0; k < d; k++) {
                        double o = std::norm(inner(mubs.vec(i, j), mubs.vec(i2, k)));
                        CHECK(std::abs(o - 1.0 / d) < 1e-11);
                    }
                }
            }
        }
    }
}

TEST_CASE("cycling construction agrees with the net") {
    for (int n : {1, 2}) {
        Pipeline p = make_pipeline(n);
        const int d = p.spec().dim();
        MubSet cycled = mub_by_cycling(p.unitary());
        REQUIRE(cycled.num_bases() == d + 1);

        // Basis 0 is computational.
        for (int j = 0; j < d; j++) {
            CHECK(std::abs(std::abs(cycled.vec(0, j)[static_cast<size_t>(j)]) - 1.0) < 1e-12);
        }
        // As unordered sets of rank-1 projectors the two constructions agree.
        for (int i = 0; i < cycled.num_bases(); i++) {
            for (int j = 0; j < d; j++) {
                double best = 0.0;
                for (int i2 = 0; i2 < p.mubs().num_bases(); i2++) {
                    for (int k = 0; k < d; k++) {
                        best = std::max(best,
                                        std::norm(inner(cycled.vec(i, j), p.mubs().vec(i2, k))));
                    }
                }
                CHECK(best > 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("cycling requires finite order") {
    CMatrix bad = CMatrix::from_rows({{1, 0}, {0, std::polar(1.0, 0.3)}});
    FieldSpec gf2 = FieldSpec::standard(1);
    CliffordUnitary u{bad, LinearMap::identity(gf2)};
    CHECK_THROWS_AS(mub_by_cycling(u), Error);
}

TEST_CASE("probability tables") {
    Pipeline p = make_pipeline(2);
    const int d = 4;
    CVec zero(static_cast<size_t>(d));
    zero[0] = 1.0;
    auto table = probability_table(p.mubs(), zero);
    REQUIRE(table.size() == 5);
    CHECK(table[0][0] == doctest::Approx(1.0));
    for (int j = 1; j < d; j++) CHECK(table[0][static_cast<size_t>(j)] == doctest::Approx(0.0));
    double total = 0.0;
    for (const auto& row : table) {
        double rs = 0.0;
        for (double v : row) rs += v;
        CHECK(rs == doctest::Approx(1.0));
        total += rs;
    }
    CHECK(total == doctest::Approx(d + 1.0));

    CVec unnormalized(static_cast<size_t>(d), Complex(1.0, 0.0));
    CHECK_THROWS_AS(probability_table(p.mubs(), unnormalized), Error);
}

TEST_CASE("one-qubit minimum uncertainty rows") {
    Pipeline p = make_pipeline(1);
    CMatrix xyz = pauli_x() + pauli_y() + pauli_z();
    EigenSystem es = eigh(xyz);
    CVec top = {es.vectors.at(0, 1), es.vectors.at(1, 1)};
    auto table = probability_table(p.mubs(), top);
    double hi = (1.0 + 1.0 / std::sqrt(3.0)) / 2.0;
    double lo = (1.0 - 1.0 / std::sqrt(3.0)) / 2.0;
    for (const auto& row : table) {
        CHECK(std::max(row[0], row[1]) == doctest::Approx(hi).epsilon(1e-12));
        CHECK(std::min(row[0], row[1]) == doctest::Approx(lo).epsilon(1e-12));
    }
}

TEST_CASE("design sum") {
    Pipeline p = make_pipeline(2);
    const int d = 4;
    CVec zero(static_cast<size_t>(d));
    zero[0] = 1.0;
    CHECK(design_sum(probability_table(p.mubs(), zero)) == doctest::Approx(2.0).epsilon(1e-12));

    Rng rng(31);
    for (int t = 0; t < 100; t++) {
        double ds = design_sum(probability_table(p.mubs(), rng.pure_state(d)));
        CHECK(std::abs(ds - 2.0) < 1e-10);
    }

    // The maximally mixed state's table (uniform rows) gives (d+1)/d, not 2;
    // mixtures are outside the pure-state contract.
    std::vector<std::vector<double>> mixed(static_cast<size_t>(d) + 1,
                                           std::vector<double>(static_cast<size_t>(d), 1.0 / d));
    CHECK(design_sum(mixed) == doctest::Approx((d + 1.0) / d));
}

TEST_CASE("renyi entropy") {
    CHECK(renyi_entropy({1.0, 0.0, 0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(renyi_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    double hi = (1.0 + 1.0 / std::sqrt(3.0)) / 2.0;
    double lo = (1.0 - 1.0 / std::sqrt(3.0)) / 2.0;
    CHECK(renyi_entropy({hi, lo}) == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-12));
    CHECK(renyi_entropy({hi, lo}) == doctest::Approx(std::log2(1.5)).epsilon(1e-12));
    CHECK_THROWS_AS(renyi_entropy({0.5, 0.2}), Error);
    CHECK_THROWS_AS(renyi_entropy({1.5, -0.5}), Error);
}

TEST_CASE("average entropy report") {
    Pipeline p1 = make_pipeline(1);
    CMatrix xyz = pauli_x() + pauli_y() + pauli_z();
    EigenSystem es = eigh(xyz);
    for (int k = 0; k < 2; k++) {
        CVec v = {es.vectors.at(0, k), es.vectors.at(1, k)};
        EntropyReport r = average_entropy_report(p1.mubs(), v);
        CHECK(r.equality);
        CHECK(r.average == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-12));
        CHECK(r.design_sum == doctest::Approx(2.0).epsilon(1e-12));
    }

    CVec zero = {1.0, 0.0};
    EntropyReport rz = average_entropy_report(p1.mubs(), zero);
    CHECK_FALSE(rz.equality);
    CHECK(rz.average > rz.bound);
    CHECK(rz.average == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // Bound values per dimension.
    CHECK(rz.bound == doctest::Approx(std::log2(3.0) - 1.0));
    Pipeline p3 = make_pipeline(3);
    CVec zero8(8);
    zero8[0] = 1.0;
    EntropyReport r8 = average_entropy_report(p3.mubs(), zero8);
    CHECK(r8.bound == doctest::Approx(std::log2(9.0) - 1.0).epsilon(1e-12));

    // Bound holds across a random sweep.
    Rng rng(41);
    for (int t = 0; t < 50; t++) {
        EntropyReport r = average_entropy_report(p3.mubs(), rng.pure_state(8));
        CHECK(r.average >= r.bound - 1e-10);
        CHECK(r.equality == (std::abs(r.average - r.bound) < 1e-9));
    }
}
