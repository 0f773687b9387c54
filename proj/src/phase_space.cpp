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

#include "dps/phase_space.hpp"

#include <algorithm>

namespace dps {

PhasePoint::PhasePoint(const FieldElement& q_, const FieldElement& p_) : q(q_), p(p_) {
    if (q.spec() != p.spec()) {
        throw Error(ErrorCode::spec_mismatch, "phase point coordinates from different fields");
    }
}

Line::Line(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    : a_(a), b_(b), c_(c) {
    if (a.spec() != b.spec() || a.spec() != c.spec()) {
        throw Error(ErrorCode::spec_mismatch, "line coefficients from different fields");
    }
    if (a_.is_zero() && b_.is_zero()) {
        throw Error(ErrorCode::invalid_argument, "line requires (a, b) != (0, 0)");
    }
    FieldElement scale = a_.is_zero() ? b_.inverse() : a_.inverse();
    a_ = a_ * scale;
    b_ = b_ * scale;
    c_ = c_ * scale;

    const FieldSpec& spec = a_.spec();
    points_.reserve(static_cast<size_t>(spec.dim()));
    if (!a_.is_zero()) {
        // q = (c + b p) / a with a = 1 after scaling.
        for (const auto& p : all_elements(spec)) {
            points_.emplace_back(c_ + b_ * p, p);
        }
    } else {
        // b = 1: p = c for every q.
        for (const auto& q : all_elements(spec)) {
            points_.emplace_back(q, c_);
        }
    }
}

bool Line::contains(const PhasePoint& x) const {
    return a_ * x.q + b_ * x.p == c_;
}

bool Line::parallel_to(const Line& other) const {
    return a_.bits() == other.a_.bits() && b_.bits() == other.b_.bits();
}

Line Line::translated(const PhasePoint& v) const {
    if (v.spec() != spec()) {
        throw Error(ErrorCode::spec_mismatch, "translation vector from a different field");
    }
    return Line(a_, b_, c_ + a_ * v.q + b_ * v.p);
}

std::tuple<unsigned, unsigned, unsigned> Line::key() const {
    return {a_.bits(), b_.bits(), c_.bits()};
}

std::vector<Striation> all_striations(const FieldSpec& spec) {
    std::vector<Striation> out;
    out.reserve(static_cast<size_t>(spec.dim()) + 1);

    Striation vertical;
    vertical.index = 0;
    for (const auto& c : all_elements(spec)) {
        vertical.lines.emplace_back(FieldElement(spec, 1), FieldElement(spec, 0), c);
    }
    vertical.dir_a = 1;
    vertical.dir_b = 0;
    out.push_back(std::move(vertical));

    for (const auto& s : all_elements(spec)) {
        Striation st;
        st.index = static_cast<int>(s.bits()) + 1;
        for (const auto& c : all_elements(spec)) {
            st.lines.emplace_back(s, FieldElement(spec, 1), c);
        }
        st.dir_a = st.lines.front().a().bits();
        st.dir_b = st.lines.front().b().bits();
        out.push_back(std::move(st));
    }
    return out;
}

int striation_of_direction(const FieldElement& dq, const FieldElement& dp) {
    if (dq.is_zero() && dp.is_zero()) {
        throw Error(ErrorCode::invalid_argument, "zero vector has no direction");
    }
    if (dq.is_zero()) return 0;
    // Lines p = s q + c have direction (1, s): slope s = dp / dq.
    return static_cast<int>((dp * dq.inverse()).bits()) + 1;
}

const Line& line_through(const Striation& striation, const PhasePoint& x) {
    for (const auto& line : striation.lines) {
        if (line.contains(x)) return line;
    }
    throw Error(ErrorCode::invalid_argument, "striation does not cover the point");
}

LinearMap::LinearMap(const FieldElement& a11, const FieldElement& a12,
                     const FieldElement& a21, const FieldElement& a22)
    : m11(a11), m12(a12), m21(a21), m22(a22) {
    if (m12.spec() != m11.spec() || m21.spec() != m11.spec() || m22.spec() != m11.spec()) {
        throw Error(ErrorCode::spec_mismatch, "matrix entries from different fields");
    }
}

LinearMap LinearMap::identity(const FieldSpec& spec) {
    return LinearMap(FieldElement(spec, 1), FieldElement(spec, 0),
                     FieldElement(spec, 0), FieldElement(spec, 1));
}

bool LinearMap::is_identity() const {
    return m11.bits() == 1 && m12.bits() == 0 && m21.bits() == 0 && m22.bits() == 1;
}

PhasePoint LinearMap::apply(const PhasePoint& x) const {
    if (x.spec() != spec()) {
        throw Error(ErrorCode::spec_mismatch, "point from a different field");
    }
    return PhasePoint(m11 * x.q + m12 * x.p, m21 * x.q + m22 * x.p);
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
    return LinearMap(m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
                     m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22);
}

LinearMap LinearMap::inverse() const {
    FieldElement d = det();
    if (d.is_zero()) {
        throw Error(ErrorCode::precondition, "singular map has no inverse");
    }
    FieldElement di = d.inverse();
    // Characteristic 2: the adjugate has no sign flips.
    return LinearMap(m22 * di, m12 * di, m21 * di, m11 * di);
}

bool LinearMap::operator==(const LinearMap& o) const {
    return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
}

Line LinearMap::apply_to_line(const Line& line) const {
    // Points y = L x of the image satisfy (a, b) L^-1 y = c.
    LinearMap inv = inverse();
    FieldElement na = line.a() * inv.m11 + line.b() * inv.m21;
    FieldElement nb = line.a() * inv.m12 + line.b() * inv.m22;
    return Line(na, nb, line.c());
}

QuadraticForm::QuadraticForm(const FieldElement& a_, const FieldElement& b_) : a(a_), b(b_) {
    if (a.spec() != b.spec()) {
        throw Error(ErrorCode::spec_mismatch, "form coefficients from different fields");
    }
    if (!is_irreducible_quadratic(a, b)) {
        throw Error(ErrorCode::invalid_argument, "x^2 + a x + b has a root; level sets degenerate");
    }
}

FieldElement QuadraticForm::eval(const PhasePoint& x) const {
    return x.q * x.q + a * x.q * x.p + b * x.p * x.p;
}

std::vector<PhasePoint> circle(const QuadraticForm& form, const FieldElement& c) {
    if (c.spec() != form.spec()) {
        throw Error(ErrorCode::spec_mismatch, "circle level from a different field");
    }
    if (c.is_zero()) {
        throw Error(ErrorCode::precondition, "only the origin has level 0; not a circle");
    }
    std::vector<PhasePoint> out;
    for (const auto& q : all_elements(form.spec())) {
        for (const auto& p : all_elements(form.spec())) {
            PhasePoint x(q, p);
            if (form.eval(x) == c) out.push_back(x);
        }
    }
    return out;
}

bool is_rotation(const LinearMap& map, const QuadraticForm& form) {
    // Level preservation at every point: for an anisotropic form this also
    // rules out singular maps (they would send some nonzero point to level 0).
    for (const auto& q : all_elements(form.spec())) {
        for (const auto& p : all_elements(form.spec())) {
            PhasePoint x(q, p);
            if (form.eval(map.apply(x)) != form.eval(x)) return false;
        }
    }
    return true;
}

bool is_primitive_rotation(const LinearMap& map, const QuadraticForm& form) {
    if (!is_rotation(map, form)) return false;
    const std::uint64_t target = static_cast<std::uint64_t>(form.spec().dim()) + 1;
    return map_order(map) == target;
}

LinearMap companion_map(const FieldElement& b) {
    if (!is_primitive_quadratic(b)) {
        throw Error(ErrorCode::precondition, "x^2 + x + b is not primitive");
    }
    return LinearMap(b.one(), b, b.one(), b.zero());
}

LinearMap primitive_rotation(const FieldElement& b) {
    if (!is_primitive_quadratic(b)) {
        throw Error(ErrorCode::precondition, "x^2 + x + b is not primitive");
    }
    FieldElement bi = b.inverse();
    return LinearMap(b.one(), b.one(), bi, bi + b.one());
}

LinearMap find_primitive_rotation(const QuadraticForm& form) {
    const FieldSpec& spec = form.spec();
    for (const auto& g : all_elements(spec)) {
        if (g.is_zero()) continue;
        LinearMap cand(g.pow(3), g.pow(6), g.pow(6), g.pow(5));
        if (cand.det().is_zero()) continue;
        if (is_primitive_rotation(cand, form)) return cand;
    }
    for (const auto& m11 : all_elements(spec)) {
        for (const auto& m12 : all_elements(spec)) {
            for (const auto& m21 : all_elements(spec)) {
                for (const auto& m22 : all_elements(spec)) {
                    LinearMap cand(m11, m12, m21, m22);
                    if (cand.det().bits() != 1) continue;
                    if (is_primitive_rotation(cand, form)) return cand;
                }
            }
        }
    }
    throw Error(ErrorCode::precondition, "no primitive rotation found for the form");
}

std::uint64_t map_order(const LinearMap& map) {
    if (map.det().is_zero()) {
        throw Error(ErrorCode::precondition, "singular map has no multiplicative order");
    }
    // Order divides |GL(2, d)| = (d^2 - 1)(d^2 - d).
    const std::uint64_t d = static_cast<std::uint64_t>(map.spec().dim());
    const std::uint64_t bound = (d * d - 1) * (d * d - d);
    LinearMap acc = map;
    std::uint64_t k = 1;
    while (!acc.is_identity()) {
        acc = acc * map;
        if (++k > bound) {
            throw Error(ErrorCode::precondition, "map order exceeds the group bound");
        }
    }
    return k;
}

} // namespace dps
