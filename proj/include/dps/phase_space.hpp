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

#ifndef DPS_PHASE_SPACE_HPP
#define DPS_PHASE_SPACE_HPP

#include <cstdint>
#include <tuple>
#include <vector>

#include "dps/field.hpp"

namespace dps {

/// A point (q, p) of the two-dimensional phase space over GF(2^n).
struct PhasePoint {
    FieldElement q;
    FieldElement p;

    PhasePoint(const FieldElement& q_, const FieldElement& p_);

    const FieldSpec& spec() const { return q.spec(); }
    bool is_origin() const { return q.is_zero() && p.is_zero(); }
    PhasePoint operator+(const PhasePoint& rhs) const { return PhasePoint(q + rhs.q, p + rhs.p); }
    bool operator==(const PhasePoint& rhs) const { return q == rhs.q && p == rhs.p; }
    bool operator!=(const PhasePoint& rhs) const { return !(*this == rhs); }
};

/// The line {(q, p) : a q + b p = c}, stored in canonical form: coefficients
/// scaled so the first nonzero of (a, b) equals 1.  The d solution points are
/// cached at construction.
class Line {
  public:
    Line(const FieldElement& a, const FieldElement& b, const FieldElement& c);

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const std::vector<PhasePoint>& points() const { return points_; }
    const FieldSpec& spec() const { return a_.spec(); }

    bool contains(const PhasePoint& x) const;
    bool parallel_to(const Line& other) const;
    Line translated(const PhasePoint& v) const;

    /// Canonical coefficient triple, usable as an ordering/identity key.
    std::tuple<unsigned, unsigned, unsigned> key() const;
    bool operator==(const Line& o) const { return key() == o.key(); }
    bool operator!=(const Line& o) const { return !(*this == o); }

  private:
    FieldElement a_, b_, c_;
    std::vector<PhasePoint> points_;
};

/// d parallel lines partitioning the d x d phase space.
struct Striation {
    int index;                  // position in the all_striations order
    std::vector<Line> lines;    // ordered by the canonical c mask
    unsigned dir_a, dir_b;      // shared canonical coefficients (a, b)
};

/// The d + 1 striations: vertical lines (constant q) first, then slope
/// s = 0, 1, ... in field mask order (lines p = s q + c).
std::vector<Striation> all_striations(const FieldSpec& spec);

/// Index (in the all_striations order) of the striation whose lines have
/// direction vector proportional to (dq, dp).
int striation_of_direction(const FieldElement& dq, const FieldElement& dp);

/// The line of the given striation passing through x.
const Line& line_through(const Striation& striation, const PhasePoint& x);

/// A 2 x 2 matrix over the field acting on column vectors (q, p).
struct LinearMap {
    FieldElement m11, m12, m21, m22;

    LinearMap(const FieldElement& a11, const FieldElement& a12,
              const FieldElement& a21, const FieldElement& a22);
    static LinearMap identity(const FieldSpec& spec);

    const FieldSpec& spec() const { return m11.spec(); }
    FieldElement det() const { return m11 * m22 + m12 * m21; }
    bool is_identity() const;

    PhasePoint apply(const PhasePoint& x) const;
    LinearMap operator*(const LinearMap& rhs) const;
    LinearMap inverse() const;
    bool operator==(const LinearMap& o) const;

    /// Image of a whole line (requires invertibility).
    Line apply_to_line(const Line& line) const;
};

/// Anisotropic quadratic form Q(q, p) = q^2 + a q p + b p^2.  Construction
/// rejects coefficients for which x^2 + a x + b has a root, since the level
/// sets would then degenerate.
struct QuadraticForm {
    FieldElement a, b;

    QuadraticForm(const FieldElement& a_, const FieldElement& b_);
    const FieldSpec& spec() const { return a.spec(); }
    FieldElement eval(const PhasePoint& x) const;
};

/// All points with Q(q, p) = c, for nonzero c; always d + 1 points.
std::vector<PhasePoint> circle(const QuadraticForm& form, const FieldElement& c);

/// True iff L maps every circle of the form onto itself.
bool is_rotation(const LinearMap& map, const QuadraticForm& form);

/// True iff L is a rotation whose orbit on any nonzero point is the full
/// circle through it; equivalently, a rotation of order exactly d + 1.
bool is_primitive_rotation(const LinearMap& map, const QuadraticForm& form);

/// [[1, b], [1, 0]] for a primitive x^2 + x + b; cycles through all nonzero
/// points (order d^2 - 1).
LinearMap companion_map(const FieldElement& b);

/// [[1, 1], [b^-1, b^-1 + 1]], the (d-1)-th power of the companion map: a
/// unit-determinant primitive rotation for the form (1, b).
LinearMap primitive_rotation(const FieldElement& b);

/// Deterministic search for a primitive rotation of an arbitrary valid form:
/// candidates [[g^3, g^6], [g^6, g^5]] over nonzero g first (the pattern that
/// covers the standard GF(8) example), then all matrices in mask order.
LinearMap find_primitive_rotation(const QuadraticForm& form);

/// Least k >= 1 with L^k = identity; throws on singular maps.
std::uint64_t map_order(const LinearMap& map);

} // namespace dps

#endif
