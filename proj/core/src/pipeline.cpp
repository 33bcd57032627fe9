#include "nuosc/pipeline.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "nuosc/synthesis.hpp"

namespace nuosc {

using std::complex;
using namespace std::complex_literals;

Matrix4 embed_pmns(const Matrix3& u) {
    Matrix4 u4 = Matrix4::Identity();
    u4.block<3, 3>(0, 0) = u;
    return u4;
}

namespace {

std::pair<double, double> oscillation_phases(const OscParams& p, const Baseline& b) {
    const double loe = b.l_over_e();
    return {kPhasePerEv2KmGeV * p.dm2_21 * loe, kPhasePerEv2KmGeV * p.dm2_31 * loe};
}

double phi_ab(double phi21, double phi31, PhiAbPolicy policy) {
    switch (policy.kind) {
        case PhiAbPolicy::Sum: return phi21 + phi31;
        case PhiAbPolicy::Zero: return 0.0;
        case PhiAbPolicy::Custom: return policy.custom_value;
    }
    return 0.0;
}

}  // namespace

Matrix4 phase_matrix4(const OscParams& p, const Baseline& b, PhiAbPolicy policy) {
    if (!(b.E_GeV > 0.0)) throw std::domain_error("phase_matrix4: E must be > 0");
    const auto [phi21, phi31] = oscillation_phases(p, b);
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(-1i * phi21);
    m(2, 2) = std::exp(-1i * phi31);
    m(3, 3) = std::exp(-1i * phi_ab(phi21, phi31, policy));
    return m;
}

Circuit phase_circuit(const OscParams& p, const Baseline& b) {
    const auto [phi21, phi31] = oscillation_phases(p, b);
    Circuit c;
    c.append(Gate::phase(0, -phi31));
    c.append(Gate::phase(1, -phi21));
    return c;
}

Matrix4 pipeline_unitary(const OscParams& p, const Baseline& b, PhiAbPolicy policy) {
    const Matrix4 u4 = embed_pmns(build_pmns(p));
    return u4 * phase_matrix4(p, b, policy) * u4.adjoint();
}

Circuit pipeline_circuit(const OscParams& p, const Baseline& b) {
    const Matrix4 u4 = embed_pmns(build_pmns(p));
    Circuit c = synthesize(u4.adjoint());
    c.append(phase_circuit(p, b));
    c.append(synthesize(u4));
    return simplify(c);
}

namespace {

Eigen::Vector4d state_probabilities(const Vector4& s) {
    Eigen::Vector4d out;
    for (int i = 0; i < 4; ++i) out(i) = std::norm(s(i));
    return out;
}

Eigen::Vector4d pipeline_for(const OscParams& p, const Baseline& b, Flavor initial,
                             PipelineBackend backend, PhiAbPolicy policy) {
    if (!is_active(initial))
        throw std::invalid_argument("run_pipeline: initial flavor must be active");
    Vector4 state = Vector4::Zero();
    state(static_cast<int>(initial)) = 1.0;
    if (backend == PipelineBackend::Matrix)
        return state_probabilities(pipeline_unitary(p, b, policy) * state);
    return state_probabilities(apply_circuit(pipeline_circuit(p, b), state));
}

}  // namespace

Eigen::Vector4d run_pipeline(const OscParams& p, const Baseline& b, Flavor initial,
                             PipelineBackend backend, PhiAbPolicy policy) {
    return pipeline_for(p, b, initial, backend, policy);
}

Eigen::Vector4d run_pipeline_matter(const OscParams& p, const MatterContext& ctx, double L_km,
                                    Flavor initial, PipelineBackend backend) {
    const OscParams eff = approx_effective_params(p, ctx).as_osc_params(p);
    return pipeline_for(eff, Baseline(L_km, ctx.E_GeV), initial, backend, PhiAbPolicy::sum());
}

}  // namespace nuosc
