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

#include <set>

#include "dps/field.hpp"
#include "dps/random.hpp"

using namespace dps;

namespace {

// Hand-written GF(4) multiplication table (elements 0, 1, w, w+1 with
// w^2 = w + 1), used as an oracle independent of the shift-and-reduce path.
const unsigned kGf4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

// GF(8) with b^3 = b^2 + 1: powers of b are 1, 2, 4, 5, 7, 3, 6 and repeat
// with period 7.  Multiplication through the log table is the oracle.
const unsigned kGf8Pow[7] = {1, 2, 4, 5, 7, 3, 6};

unsigned gf8_log(unsigned x) {
    for (unsigned k = 0; k < 7; k++) {
        if (kGf8Pow[k] == x) return k;
    }
    FAIL("not a nonzero GF(8) element");
    return 0;
}

unsigned gf8_mul_oracle(unsigned x, unsigned y) {
    if (x == 0 || y == 0) return 0;
    return kGf8Pow[(gf8_log(x) + gf8_log(y)) % 7];
}

} // namespace

TEST_CASE("default moduli") {
    CHECK(default_modulus(1) == 0b10);
    CHECK(default_modulus(2) == 0b111);
    CHECK(default_modulus(3) == 0b1101);
    CHECK(default_modulus(4) == 0b10011);
    for (int n = 1; n <= 8; n++) {
        CHECK(is_irreducible_poly(default_modulus(n)));
    }
}

TEST_CASE("irreducibility of small polynomials") {
    CHECK(is_irreducible_poly(0b111));      // x^2 + x + 1
    CHECK_FALSE(is_irreducible_poly(0b101)); // x^2 + 1 = (x + 1)^2
    CHECK_FALSE(is_irreducible_poly(0b110)); // x^2 + x = x(x + 1)
    CHECK(is_irreducible_poly(0b1011));
    CHECK(is_irreducible_poly(0b1101));
    CHECK_FALSE(is_irreducible_poly(0b1111)); // divisible by x + 1
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(FieldSpec(2, 0b101), Error);   // reducible
    CHECK_THROWS_AS(FieldSpec(2, 0b1011), Error);  // wrong degree
    CHECK_THROWS_AS(FieldSpec(0, 0b11), Error);
    CHECK_THROWS_AS(FieldSpec(9, 0b1000000011), Error);
    CHECK(FieldSpec(3, 0b1011).dim() == 8);
}

TEST_CASE("addition is coefficient xor") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldElement w(gf4, 2), one(gf4, 1);
    CHECK((w + one).bits() == 3);
    CHECK((w + w).bits() == 0);

    FieldSpec gf8 = FieldSpec::standard(3);
    FieldElement b2(gf8, 4), b2p1(gf8, 5);
    CHECK((b2 + b2p1).bits() == 1);
}

TEST_CASE("spec mismatch is rejected") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldSpec gf8 = FieldSpec::standard(3);
    FieldSpec gf8_alt(3, 0b1011);
    CHECK_THROWS_AS(FieldElement(gf4, 1) + FieldElement(gf8, 1), Error);
    CHECK_THROWS_AS(FieldElement(gf8, 2) * FieldElement(gf8_alt, 2), Error);
}

TEST_CASE("multiplication against hand tables") {
    FieldSpec gf4 = FieldSpec::standard(2);
    for (unsigned x = 0; x < 4; x++) {
        for (unsigned y = 0; y < 4; y++) {
            CHECK((FieldElement(gf4, x) * FieldElement(gf4, y)).bits() == kGf4Mul[x][y]);
        }
    }
    FieldElement w(gf4, 2);
    CHECK((w * w).bits() == 3); // w^2 = w + 1

    FieldSpec gf8 = FieldSpec::standard(3);
    for (unsigned x = 0; x < 8; x++) {
        for (unsigned y = 0; y < 8; y++) {
            CHECK((FieldElement(gf8, x) * FieldElement(gf8, y)).bits() == gf8_mul_oracle(x, y));
        }
    }
    FieldElement b(gf8, 2);
    CHECK((b * b * b).bits() == 5); // b^3 = b^2 + 1
}

TEST_CASE("inverses by exhaustive search") {
    for (int n : {1, 2, 3, 4}) {
        FieldSpec spec = FieldSpec::standard(n);
        for (const auto& x : all_elements(spec)) {
            if (x.is_zero()) continue;
            // Oracle: the unique y among all elements with x * y = 1.
            unsigned oracle = 0;
            int found = 0;
            for (const auto& y : all_elements(spec)) {
                if ((x * y).bits() == 1) { oracle = y.bits(); found++; }
            }
            REQUIRE(found == 1);
            CHECK(x.inverse().bits() == oracle);
            CHECK((x * x.inverse()).bits() == 1);
        }
    }
    FieldSpec gf4 = FieldSpec::standard(2);
    CHECK(FieldElement(gf4, 2).inverse().bits() == 3); // 1/w = w + 1
    CHECK(FieldElement(gf4, 1).inverse().bits() == 1);
    FieldSpec gf8 = FieldSpec::standard(3);
    CHECK(FieldElement(gf8, 2).inverse().bits() == 6); // 1/b = b^2 + b
    CHECK_THROWS_AS(FieldElement(gf4, 0).inverse(), Error);
}

TEST_CASE("field axioms") {
    for (int n : {1, 2, 3}) {
        FieldSpec spec = FieldSpec::standard(n);
        auto elems = all_elements(spec);
        for (const auto& x : elems) {
            CHECK(x.pow(static_cast<std::uint64_t>(spec.dim())) == x);
            for (const auto& y : elems) {
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (const auto& z : elems) {
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
    // Randomized triples for the larger degrees.
    Rng rng(11);
    for (int n : {5, 8}) {
        FieldSpec spec = FieldSpec::standard(n);
        for (int i = 0; i < 200; i++) {
            FieldElement x(spec, static_cast<unsigned>(rng.bits() % spec.dim()));
            FieldElement y(spec, static_cast<unsigned>(rng.bits() % spec.dim()));
            FieldElement z(spec, static_cast<unsigned>(rng.bits() % spec.dim()));
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x.pow(static_cast<std::uint64_t>(spec.dim())) == x);
        }
    }
}

TEST_CASE("trace values and linearity") {
    FieldSpec gf4 = FieldSpec::standard(2);
    CHECK(trace(FieldElement(gf4, 2)).bits() == 1); // tr(w) = w + w^2 = 1
    CHECK(trace(FieldElement(gf4, 1)).bits() == 0); // tr(1) = 1 + 1 = 0
    CHECK(trace(FieldElement(gf4, 0)).bits() == 0);

    for (int n = 1; n <= 4; n++) {
        FieldSpec spec = FieldSpec::standard(n);
        bool nonzero = false;
        for (const auto& x : all_elements(spec)) {
            CHECK(trace(x).bits() <= 1);
            if (trace(x).bits() == 1) nonzero = true;
            for (const auto& y : all_elements(spec)) {
                CHECK(trace(x + y) == trace(x) + trace(y));
            }
        }
        CHECK(nonzero);
    }
}

TEST_CASE("dual basis") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis(gf4, {FieldElement(gf4, 2), FieldElement(gf4, 3)});
    FieldBasis dual = dual_basis(basis);
    // (w, w+1) is self-dual: all four trace conditions by enumeration.
    for (int i = 0; i < 2; i++) {
        CHECK(dual[i].bits() == basis[i].bits());
        for (int j = 0; j < 2; j++) {
            CHECK(trace(basis[i] * dual[j]).bits() == (i == j ? 1u : 0u));
        }
    }
    CHECK(basis.is_self_dual());

    FieldSpec gf2 = FieldSpec::standard(1);
    FieldBasis unit(gf2, {FieldElement(gf2, 1)});
    CHECK(dual_basis(unit)[0].bits() == 1);

    // Dual of the dual is the original; polynomial basis of GF(8).
    FieldSpec gf8 = FieldSpec::standard(3);
    FieldBasis poly(gf8, {FieldElement(gf8, 1), FieldElement(gf8, 2), FieldElement(gf8, 4)});
    CHECK_FALSE(poly.is_self_dual());
    FieldBasis pd = dual_basis(poly);
    CHECK(dual_basis(pd) == poly);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            CHECK(trace(poly[i] * pd[j]).bits() == (i == j ? 1u : 0u));
        }
    }
}

TEST_CASE("basis validation") {
    FieldSpec gf4 = FieldSpec::standard(2);
    CHECK_THROWS_AS(FieldBasis(gf4, {FieldElement(gf4, 2), FieldElement(gf4, 2)}), Error);
    CHECK_THROWS_AS(FieldBasis(gf4, {FieldElement(gf4, 0), FieldElement(gf4, 1)}), Error);
    CHECK_THROWS_AS(FieldBasis(gf4, {FieldElement(gf4, 1)}), Error); // wrong count
}

TEST_CASE("self-dual basis search") {
    FieldSpec gf2 = FieldSpec::standard(1);
    CHECK(find_self_dual_basis(gf2)[0].bits() == 1);

    // Oracle for GF(4): enumerate every ordered pair and keep the self-dual
    // ones; the search must return the smallest ascending tuple.
    FieldSpec gf4 = FieldSpec::standard(2);
    std::set<std::pair<unsigned, unsigned>> self_dual_pairs;
    for (unsigned a = 1; a < 4; a++) {
        for (unsigned b = 1; b < 4; b++) {
            if (a == b) continue;
            FieldElement ea(gf4, a), eb(gf4, b);
            if (trace(ea * ea).bits() == 1 && trace(eb * eb).bits() == 1 &&
                trace(ea * eb).bits() == 0) {
                self_dual_pairs.insert({a, b});
            }
        }
    }
    CHECK(self_dual_pairs == std::set<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}});
    FieldBasis found = find_self_dual_basis(gf4);
    CHECK(found[0].bits() == 2);
    CHECK(found[1].bits() == 3);

    for (int n = 1; n <= 6; n++) {
        FieldSpec spec = FieldSpec::standard(n);
        FieldBasis basis = find_self_dual_basis(spec);
        CHECK(basis.is_self_dual());
        CHECK(basis == find_self_dual_basis(spec)); // reproducible
        CHECK(dual_basis(basis) == basis);
    }
}

TEST_CASE("coordinate expansion") {
    FieldSpec gf4 = FieldSpec::standard(2);
    FieldBasis basis(gf4, {FieldElement(gf4, 2), FieldElement(gf4, 3)});
    CHECK(basis.expand(FieldElement(gf4, 1)) == std::vector<int>{1, 1}); // w + (w+1) = 1
    CHECK(basis.expand(FieldElement(gf4, 0)) == std::vector<int>{0, 0});
    CHECK(basis.expand(FieldElement(gf4, 3)) == std::vector<int>{0, 1});

    for (int n = 1; n <= 4; n++) {
        FieldSpec spec = FieldSpec::standard(n);
        FieldBasis basis2 = find_self_dual_basis(spec);
        for (const auto& x : all_elements(spec)) {
            CHECK(basis2.combine(basis2.expand(x)) == x);
        }
    }
}

TEST_CASE("irreducible quadratics") {
    FieldSpec gf2 = FieldSpec::standard(1);
    CHECK(is_irreducible_quadratic(FieldElement(gf2, 1), FieldElement(gf2, 1)));
    FieldSpec gf4 = FieldSpec::standard(2);
    CHECK(is_irreducible_quadratic(FieldElement(gf4, 1), FieldElement(gf4, 2)));
    CHECK_FALSE(is_irreducible_quadratic(FieldElement(gf4, 0), FieldElement(gf4, 0)));
    // x^2 + x + 1 has the root w in GF(4).
    CHECK_FALSE(is_irreducible_quadratic(FieldElement(gf4, 1), FieldElement(gf4, 1)));
}

TEST_CASE("primitive quadratics") {
    FieldSpec gf2 = FieldSpec::standard(1);
    CHECK(is_primitive_quadratic(FieldElement(gf2, 1)));

    FieldSpec gf4 = FieldSpec::standard(2);
    CHECK(is_primitive_quadratic(FieldElement(gf4, 2)));
    CHECK_FALSE(is_primitive_quadratic(FieldElement(gf4, 0)));
    CHECK_FALSE(is_primitive_quadratic(FieldElement(gf4, 1))); // reducible

    // Primitive implies irreducible, and a primitive b exists for every n.
    for (int n = 1; n <= 4; n++) {
        FieldSpec spec = FieldSpec::standard(n);
        bool any = false;
        for (const auto& b : all_elements(spec)) {
            if (is_primitive_quadratic(b)) {
                any = true;
                CHECK(is_irreducible_quadratic(b.one(), b));
            }
        }
        CHECK(any);
    }
}
