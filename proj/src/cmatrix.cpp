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

#include "dps/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dps/error.hpp"

namespace dps {

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; i++) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    CMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.dim_) {
            throw Error(ErrorCode::invalid_argument, "matrix rows must be square");
        }
        int j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        i++;
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int k = 0; k < dim_; k++) {
            Complex aik = at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < dim_; j++) {
                r.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    CMatrix r(dim_);
    for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    CMatrix r(dim_);
    for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] - rhs.a_[i];
    return r;
}

CMatrix CMatrix::scaled(Complex s) const {
    CMatrix r(dim_);
    for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] * s;
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) r.at(j, i) = std::conj(at(i, j));
    }
    return r;
}

CMatrix CMatrix::pow_int(int k) const {
    CMatrix acc = identity(dim_);
    for (int i = 0; i < k; i++) acc = acc * *this;
    return acc;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; i++) t += at(i, i);
    return t;
}

Complex CMatrix::inner(const CMatrix& rhs) const {
    Complex t = 0.0;
    for (size_t i = 0; i < a_.size(); i++) t += std::conj(a_[i]) * rhs.a_[i];
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); i++) m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
    return m;
}

bool CMatrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) < tol;
}

bool CMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) < tol;
}

CVec CMatrix::apply(const CVec& v) const {
    CVec r(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; i++) {
        Complex s = 0.0;
        for (int j = 0; j < dim_; j++) s += at(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); i++) {
        for (int j = 0; j < a.dim(); j++) {
            for (int k = 0; k < b.dim(); k++) {
                for (int l = 0; l < b.dim(); l++) {
                    r.at(i * b.dim() + k, j * b.dim() + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return r;
}

CMatrix outer(const CVec& u) {
    CMatrix r(static_cast<int>(u.size()));
    for (size_t i = 0; i < u.size(); i++) {
        for (size_t j = 0; j < u.size(); j++) {
            r.at(static_cast<int>(i), static_cast<int>(j)) = u[i] * std::conj(u[j]);
        }
    }
    return r;
}

Complex inner(const CVec& u, const CVec& v) {
    Complex s = 0.0;
    for (size_t i = 0; i < u.size(); i++) s += std::conj(u[i]) * v[i];
    return s;
}

double norm(const CVec& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

CVec normalized(const CVec& v) {
    double n = norm(v);
    if (n == 0.0) {
        throw Error(ErrorCode::invalid_argument, "cannot normalize the zero vector");
    }
    return scaled(v, 1.0 / n);
}

CVec scaled(const CVec& v, Complex s) {
    CVec r = v;
    for (auto& x : r) x *= s;
    return r;
}

CVec add(const CVec& u, const CVec& v) {
    CVec r = u;
    for (size_t i = 0; i < r.size(); i++) r[i] += v[i];
    return r;
}

CVec phase_fixed(const CVec& v, double tol) {
    for (const auto& x : v) {
        double m = std::abs(x);
        if (m > tol) {
            return scaled(v, std::conj(x) / m);
        }
    }
    return v;
}

EigenSystem eigh(const CMatrix& a) {
    const int n = a.dim();
    if (!a.is_hermitian(1e-9 * (1.0 + a.max_abs()))) {
        throw Error(ErrorCode::validation, "eigh requires a Hermitian matrix");
    }
    CMatrix h = a;
    // Symmetrize exactly so roundoff in the input cannot accumulate.
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            Complex m = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
            h.at(i, j) = m;
            h.at(j, i) = std::conj(m);
        }
        h.at(i, i) = h.at(i, i).real();
    }
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(1.0, h.max_abs());
    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0.0;
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) off = std::max(off, std::abs(h.at(p, q)));
        }
        if (off < 1e-15 * scale) break;

        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                Complex beta = h.at(p, q);
                double ab = std::abs(beta);
                if (ab < 1e-18 * scale) continue;
                // Unitary 2x2 rotation zeroing h[p][q]:
                //   t^2 - 2 tau t - 1 = 0, tau = (h_qq - h_pp) / (2|beta|),
                //   s = t c e^{-i arg beta}.
                double tau = (h.at(q, q).real() - h.at(p, p).real()) / (2.0 * ab);
                double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                Complex u = beta / ab;                   // e^{i arg beta}
                Complex s = t * c * std::conj(u);

                // Columns p, q of h and v: right-multiply by G.
                for (int i = 0; i < n; i++) {
                    Complex hip = h.at(i, p), hiq = h.at(i, q);
                    h.at(i, p) = c * hip + s * hiq;
                    h.at(i, q) = -std::conj(s) * hip + c * hiq;
                    Complex vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = c * vip + s * viq;
                    v.at(i, q) = -std::conj(s) * vip + c * viq;
                }
                // Rows p, q of h: left-multiply by G^dag.
                for (int j = 0; j < n; j++) {
                    Complex hpj = h.at(p, j), hqj = h.at(q, j);
                    h.at(p, j) = c * hpj + std::conj(s) * hqj;
                    h.at(q, j) = -s * hpj + c * hqj;
                }
                h.at(p, q) = 0.0;
                h.at(q, p) = 0.0;
                h.at(p, p) = h.at(p, p).real();
                h.at(q, q) = h.at(q, q).real();
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return h.at(x, x).real() < h.at(y, y).real(); });

    EigenSystem out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors = CMatrix(n);
    for (int k = 0; k < n; k++) {
        out.values[static_cast<size_t>(k)] = h.at(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        CVec col(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) col[static_cast<size_t>(i)] = v.at(i, order[static_cast<size_t>(k)]);
        col = phase_fixed(col);
        for (int i = 0; i < n; i++) out.vectors.at(i, k) = col[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<CVec> orthonormal_columns(const CMatrix& p, double rank_tol) {
    const int n = p.dim();
    std::vector<CVec> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; j++) {
        CVec c(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) c[static_cast<size_t>(i)] = p.at(i, j);
        cols[static_cast<size_t>(j)] = std::move(c);
    }
    std::vector<CVec> basis;
    for (int step = 0; step < n; step++) {
        // Pivot: remaining column with the largest residual norm.
        int best = -1;
        double best_norm = rank_tol;
        for (int j = 0; j < n; j++) {
            double nj = norm(cols[static_cast<size_t>(j)]);
            if (nj > best_norm) { best_norm = nj; best = j; }
        }
        if (best < 0) break;
        CVec b = phase_fixed(normalized(cols[static_cast<size_t>(best)]));
        for (auto& c : cols) {
            Complex coef = inner(b, c);
            for (size_t i = 0; i < c.size(); i++) c[i] -= coef * b[i];
        }
        basis.push_back(std::move(b));
    }
    return basis;
}

} // namespace dps
