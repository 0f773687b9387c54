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

#ifndef DPS_CMATRIX_HPP
#define DPS_CMATRIX_HPP

#include <complex>
#include <vector>

namespace dps {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense square complex matrix, row-major.  Everything in this toolkit is at
/// most 16 x 16, so no attention is paid to asymptotics.
class CMatrix {
  public:
    CMatrix() : dim_(0) {}
    explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
    static CMatrix identity(int dim);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return dim_; }
    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(Complex s) const;
    CMatrix adjoint() const;
    CMatrix pow_int(int k) const;

    Complex trace() const;
    /// Frobenius inner product Tr[A^dag B].
    Complex inner(const CMatrix& rhs) const;
    double max_abs() const;
    double max_abs_diff(const CMatrix& rhs) const;

    bool is_unitary(double tol) const;
    bool is_hermitian(double tol) const;

    CVec apply(const CVec& v) const;

    bool operator==(const CMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  private:
    int dim_;
    std::vector<Complex> a_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// |u><u| (u need not be normalized beforehand; it is used as given).
CMatrix outer(const CVec& u);

Complex inner(const CVec& u, const CVec& v); // sum conj(u_i) v_i
double norm(const CVec& v);
CVec normalized(const CVec& v);
CVec scaled(const CVec& v, Complex s);
CVec add(const CVec& u, const CVec& v);

/// Multiply by the phase making the first entry of magnitude > tol real
/// positive; gives vectors a reproducible gauge.
CVec phase_fixed(const CVec& v, double tol = 1e-8);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.  Eigenvalues ascending; eigenvectors are the matching columns
/// of `vectors`, each phase-fixed.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
};
EigenSystem eigh(const CMatrix& hermitian);

/// Deterministic orthonormal spanning set for the column space of a
/// (near-)projector: modified Gram-Schmidt over columns, largest residual
/// norm first, stopping below rank_tol.
std::vector<CVec> orthonormal_columns(const CMatrix& p, double rank_tol);

} // namespace dps

#endif
