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

#include "dps/wigner_net.hpp"

#include <algorithm>
#include <cmath>

#include "dps/random.hpp"

namespace dps {

QuantumNet::QuantumNet(const FieldSpec& spec, const FieldBasis& basis_q,
                       const LinearMap& rotation, CliffordUnitary unitary)
    : spec_(spec), basis_q_(basis_q), rotation_(rotation), unitary_(std::move(unitary)),
      translations_(spec, basis_q), striations_(all_striations(spec)) {}

QuantumNet QuantumNet::build(const LinearMap& rotation, const CliffordUnitary& unitary,
                             const FieldBasis& basis_q) {
    const FieldSpec& spec = basis_q.spec();
    if (rotation.spec() != spec) {
        throw Error(ErrorCode::spec_mismatch, "rotation and basis from different fields");
    }
    const int d = spec.dim();

    QuantumNet net(spec, basis_q, rotation, unitary);

    // The unitary must actually implement the rotation on the generators.
    FieldElement zero(spec, 0), one(spec, 1);
    for (const PhasePoint& gen : {PhasePoint(one, zero), PhasePoint(zero, one)}) {
        auto [image, phase] = conjugation_image(unitary.matrix, gen, net.translations_);
        (void)phase;
        if (image != rotation.apply(gen)) {
            throw Error(ErrorCode::precondition, "unitary does not realize the rotation");
        }
    }

    // Orbit of the vertical striation under the rotation must visit every
    // striation exactly once.
    std::vector<int> orbit;
    orbit.reserve(static_cast<size_t>(d) + 1);
    PhasePoint dir(zero, one); // direction vector of vertical lines
    LinearMap rk = LinearMap::identity(spec);
    for (int k = 0; k <= d; k++) {
        orbit.push_back(striation_of_direction(dir.q, dir.p));
        dir = rotation.apply(dir);
    }
    {
        std::vector<int> sorted = orbit;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i <= d; i++) {
            if (sorted[static_cast<size_t>(i)] != i) {
                throw Error(ErrorCode::precondition,
                            "rotation does not cycle through all striations; not primitive");
            }
        }
    }

    net.projectors_.assign(static_cast<size_t>(d) + 1, std::vector<CMatrix>(static_cast<size_t>(d)));
    for (size_t s = 0; s < net.striations_.size(); s++) {
        const auto& st = net.striations_[s];
        for (size_t l = 0; l < st.lines.size(); l++) {
            net.line_index_[st.lines[l].key()] = {static_cast<int>(s), static_cast<int>(l)};
        }
    }

    // Vertical lines carry computational basis projectors; the k-th rotated
    // striation carries their U^k conjugates on the R^k images of the lines.
    std::vector<CMatrix> base;
    base.reserve(static_cast<size_t>(d));
    for (int c = 0; c < d; c++) {
        std::vector<int> coeffs = basis_q.expand(FieldElement(spec, static_cast<unsigned>(c)));
        CVec ket(static_cast<size_t>(d));
        ket[static_cast<size_t>(ket_index(coeffs))] = 1.0;
        base.push_back(outer(ket));
    }

    CMatrix uk = CMatrix::identity(d);
    for (int k = 0; k <= d; k++) {
        CMatrix uk_dag = uk.adjoint();
        for (int c = 0; c < d; c++) {
            Line vertical(one, zero, FieldElement(spec, static_cast<unsigned>(c)));
            Line image = rk.apply_to_line(vertical);
            auto it = net.line_index_.find(image.key());
            if (it == net.line_index_.end() || it->second.first != orbit[static_cast<size_t>(k)]) {
                throw Error(ErrorCode::precondition, "rotated line left its expected striation");
            }
            net.projectors_[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)] =
                uk * base[static_cast<size_t>(c)] * uk_dag;
        }
        uk = unitary.matrix * uk;
        rk = rotation * rk;
    }

    // Cache the phase-point operators.
    net.phase_ops_.reserve(static_cast<size_t>(d) * d);
    for (int q = 0; q < d; q++) {
        for (int p = 0; p < d; p++) {
            PhasePoint alpha(FieldElement(spec, static_cast<unsigned>(q)),
                             FieldElement(spec, static_cast<unsigned>(p)));
            CMatrix a = CMatrix::identity(d).scaled(-1.0);
            for (const auto& st : net.striations_) {
                const Line& line = line_through(st, alpha);
                auto [si, li] = net.line_index_.at(line.key());
                a = a + net.projectors_[static_cast<size_t>(si)][static_cast<size_t>(li)];
            }
            net.phase_ops_.push_back(std::move(a));
        }
    }
    return net;
}

const CMatrix& QuantumNet::projector(int striation, int line_index) const {
    return projectors_[static_cast<size_t>(striation)][static_cast<size_t>(line_index)];
}

const CMatrix& QuantumNet::projector(const Line& line) const {
    auto it = line_index_.find(line.key());
    if (it == line_index_.end()) {
        throw Error(ErrorCode::invalid_argument, "unknown line");
    }
    return projectors_[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)];
}

const CMatrix& QuantumNet::phase_point_operator(const PhasePoint& alpha) const {
    return phase_ops_[static_cast<size_t>(alpha.q.bits()) * spec_.dim() + alpha.p.bits()];
}

double WignerFunction::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double WignerFunction::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

WignerFunction wigner(const QuantumNet& net, const CMatrix& rho) {
    const int d = net.spec().dim();
    if (rho.dim() != d) {
        throw Error(ErrorCode::validation, "state dimension does not match the net");
    }
    if (!rho.is_hermitian(1e-10)) {
        throw Error(ErrorCode::validation, "state is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
        throw Error(ErrorCode::validation, "state trace is not 1");
    }
    if (eigh(rho).values.front() < -1e-10) {
        throw Error(ErrorCode::validation, "state has a negative eigenvalue");
    }

    WignerFunction w;
    w.d = d;
    w.state = rho;
    w.values.resize(static_cast<size_t>(d) * d);
    for (int q = 0; q < d; q++) {
        for (int p = 0; p < d; p++) {
            PhasePoint alpha(FieldElement(net.spec(), static_cast<unsigned>(q)),
                             FieldElement(net.spec(), static_cast<unsigned>(p)));
            w.values[static_cast<size_t>(q) * d + p] =
                net.phase_point_operator(alpha).inner(rho).real() / d;
        }
    }
    return w;
}

WignerFunction wigner(const QuantumNet& net, const CVec& psi) {
    return wigner(net, outer(normalized(psi)));
}

double max_center_value(const QuantumNet& net, const PhasePoint& alpha) {
    EigenSystem es = eigh(net.phase_point_operator(alpha));
    return es.values.back() / net.spec().dim();
}

CMatrix reconstruct_state(const QuantumNet& net, const WignerFunction& w) {
    const int d = net.spec().dim();
    CMatrix rho(d);
    for (int q = 0; q < d; q++) {
        for (int p = 0; p < d; p++) {
            PhasePoint alpha(FieldElement(net.spec(), static_cast<unsigned>(q)),
                             FieldElement(net.spec(), static_cast<unsigned>(p)));
            rho = rho + net.phase_point_operator(alpha).scaled(w.at(static_cast<unsigned>(q),
                                                                    static_cast<unsigned>(p)));
        }
    }
    return rho;
}

CovarianceReport covariance_check(const QuantumNet& net, int num_states, std::uint64_t seed) {
    const FieldSpec& spec = net.spec();
    const int d = spec.dim();
    Rng rng(seed);
    CovarianceReport report;
    report.states_tested = num_states;

    const CMatrix& u = net.unitary().matrix;
    CMatrix udag = u.adjoint();

    for (int s = 0; s < num_states; s++) {
        CMatrix rho = outer(rng.pure_state(d));
        WignerFunction w = wigner(net, rho);

        for (int vq = 0; vq < d; vq++) {
            for (int vp = 0; vp < d; vp++) {
                const CMatrix& t = net.translations().at(static_cast<unsigned>(vq),
                                                         static_cast<unsigned>(vp));
                WignerFunction wt = wigner(net, t * rho * t.adjoint());
                for (int q = 0; q < d; q++) {
                    for (int p = 0; p < d; p++) {
                        double expected = w.at(static_cast<unsigned>(q), static_cast<unsigned>(p));
                        double got = wt.at(static_cast<unsigned>(q) ^ static_cast<unsigned>(vq),
                                           static_cast<unsigned>(p) ^ static_cast<unsigned>(vp));
                        report.max_translation_deviation =
                            std::max(report.max_translation_deviation, std::abs(got - expected));
                    }
                }
            }
        }

        WignerFunction wr = wigner(net, u * rho * udag);
        for (int q = 0; q < d; q++) {
            for (int p = 0; p < d; p++) {
                PhasePoint alpha(FieldElement(spec, static_cast<unsigned>(q)),
                                 FieldElement(spec, static_cast<unsigned>(p)));
                PhasePoint image = net.rotation().apply(alpha);
                double expected = w.at(alpha.q.bits(), alpha.p.bits());
                double got = wr.at(image.q.bits(), image.p.bits());
                report.max_rotation_deviation =
                    std::max(report.max_rotation_deviation, std::abs(got - expected));
            }
        }
    }
    return report;
}

} // namespace dps
