#include "tqgate/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace tqgate {

namespace {

using Matrix3 = Eigen::Matrix3cd;

Matrix9 embed(const Matrix3& op, int emitter) {
    const Matrix3 id = Matrix3::Identity();
    Matrix9 out;
    const Matrix3& a = emitter == 0 ? op : id;
    const Matrix3& b = emitter == 0 ? id : op;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return out;
}

Matrix3 lowering() {
    Matrix3 s = Matrix3::Zero();
    s(kDown, kExcited) = 1.0;
    return s;
}

Matrix3 excited_projector() {
    Matrix3 p = Matrix3::Zero();
    p(kExcited, kExcited) = 1.0;
    return p;
}

Matrix3 ground_sigma_z() {
    Matrix3 z = Matrix3::Zero();
    z(kUp, kUp) = 1.0;
    z(kDown, kDown) = -1.0;
    return z;
}

Vector9 bell_state(int sign) {
    Vector9 psi = Vector9::Zero();
    psi(3 * kUp + kDown) = 1.0 / std::sqrt(2.0);
    psi(3 * kDown + kUp) = sign / std::sqrt(2.0);
    return psi;
}

Matrix9 apply_super(const MatrixX& s, const Matrix9& rho) {
    Matrix9 out = unvectorize(s * vectorize(rho));
    return 0.5 * (out + Matrix9(out.adjoint())); // keep Hermitian
}

struct PatternSums {
    double efficiency = 0.0;
    double fidelity = 0.0;
};

} // namespace

double ConditionalState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix9> es(0.5 * (rho + Matrix9(rho.adjoint())));
    return es.eigenvalues().minCoeff();
}

TwoEmitterLiouvillian::TwoEmitterLiouvillian(const EmitterParams& emitter,
                                             const CavitySet& cavity,
                                             const DetectionChain& det) {
    emitter.validate();
    const double gp = cavity.gamma_prime;
    const double ep = eta_prime(cavity, det);
    const double gstar = emitter.gamma_star;
    const double gss = emitter.gamma_s_star();

    const Matrix9 s_a = embed(lowering(), 0);
    const Matrix9 s_b = embed(lowering(), 1);
    d_plus_ = std::sqrt(ep * gp / 2.0) * (s_a + s_b);
    d_minus_ = std::sqrt(ep * gp / 2.0) * (s_a - s_b);

    full_ = MatrixX::Zero(81, 81);
    full_ += dissipator(d_plus_) + dissipator(d_minus_);
    for (int i = 0; i < 2; ++i) {
        const Matrix9 s_i = embed(lowering(), i);
        full_ += dissipator(Matrix9(std::sqrt((1.0 - ep) * gp) * s_i));
        full_ += dissipator(Matrix9(std::sqrt(2.0 * gstar) * embed(excited_projector(), i)));
        full_ += dissipator(Matrix9(std::sqrt(gss / 2.0) * embed(ground_sigma_z(), i)));
        full_ += dissipator(Matrix9(std::sqrt(gss / 2.0) * embed(excited_projector(), i)));
    }
    conditional_ = full_ - sandwich_superop(d_plus_) - sandwich_superop(d_minus_);
}

ConditionalState detection_window(const TwoEmitterLiouvillian& liou, Detector d,
                                  double tau, const Matrix9& rho) {
    if (tau < 0.0)
        throw std::invalid_argument("detection_window: tau must be >= 0");
    ConditionalState out;
    if (tau == 0.0) return out;
    const MatrixX j = propagator_integral(liou.conditional(), tau);
    const Matrix9 waited = apply_super(j, rho);
    const Matrix9& jump = liou.jump_op(d);
    out.rho = jump * waited * jump.adjoint();
    return out;
}

MatrixX conditional_integral(const MatrixX& l_c, const MatrixX& s, double tau) {
    if (tau < 0.0)
        throw std::invalid_argument("conditional_integral: tau must be >= 0");
    if (tau == 0.0) return MatrixX::Zero(l_c.rows(), l_c.cols());
    return van_loan_integral(l_c, s, l_c, tau);
}

Matrix9 spin_flip(const Matrix9& rho) {
    Matrix3 x = Matrix3::Zero();
    x(kUp, kDown) = 1.0;
    x(kDown, kUp) = 1.0;
    x(kExcited, kExcited) = 1.0;
    const Matrix9 u = embed(x, 0) * embed(x, 1);
    return u * rho * u.adjoint();
}

Matrix9 excitation_pulse(const Matrix9& rho, double phase) {
    Matrix3 u = Matrix3::Zero();
    const std::complex<double> ph = std::exp(std::complex<double>(0.0, phase));
    u(kUp, kUp) = 1.0;
    u(kExcited, kDown) = ph;
    u(kDown, kExcited) = -std::conj(ph);
    const Matrix9 uu = embed(u, 0) * embed(u, 1);
    return uu * rho * uu.adjoint();
}

namespace {

// Shared skeleton of both protocols: one click per window, with a
// scheme-specific control section (spin flip, flip-period evolution,
// re-excitation) between the windows.
template <typename Control>
OracleResult run_patterns(const TwoEmitterLiouvillian& liou, const Matrix9& rho0,
                          double detection_time, Control&& mid_section) {
    OracleResult res;
    const MatrixX window = propagator_integral(liou.conditional(), detection_time);
    const Matrix9 waited0 = apply_super(window, rho0);

    PatternSums sums;
    int idx = 0;
    for (Detector early : {Detector::left, Detector::right}) {
        const Matrix9& d_early = liou.jump_op(early);
        const Matrix9 rho_e = d_early * waited0 * d_early.adjoint();
        const Matrix9 waited_mid = apply_super(window, mid_section(rho_e));
        for (Detector late : {Detector::left, Detector::right}) {
            const Matrix9& d_late = liou.jump_op(late);
            const Matrix9 rho_n = d_late * waited_mid * d_late.adjoint();

            ConditionalState state;
            state.rho = rho_n;
            state.early = early;
            state.late = late;
            const double tr = state.trace();
            sums.efficiency += tr;
            const Vector9 target = bell_state(early == late ? +1 : -1);
            if (tr > 0.0)
                sums.fidelity += 0.25 * (target.adjoint() * rho_n * target)(0).real() / tr;
            res.patterns[idx++] = std::move(state);
        }
    }
    res.efficiency = sums.efficiency;
    res.fidelity = sums.fidelity;
    return res;
}

} // namespace

OracleResult simulate_ibf(const EmitterParams& emitter, const CavitySet& cavity,
                          const DetectionChain& det, double detection_time,
                          double delta_t) {
    TwoEmitterLiouvillian liou(emitter, cavity, det);
    Matrix9 rho0 = Matrix9::Zero();
    rho0(3 * kExcited + kExcited, 3 * kExcited + kExcited) = 1.0;
    const MatrixX flip_evolution = matrix_exp(MatrixX(liou.conditional() * delta_t));
    // feedback: spin flip on the click, then the flip period elapses
    return run_patterns(liou, rho0, detection_time, [&](const Matrix9& rho) {
        return apply_super(flip_evolution, spin_flip(rho));
    });
}

OracleResult simulate_ib(const EmitterParams& emitter, const CavitySet& cavity,
                         const DetectionChain& det, double detection_time,
                         double delta_t) {
    TwoEmitterLiouvillian liou(emitter, cavity, det);
    Vector9 psi = Vector9::Zero();
    const double amp = 0.5; // ((|up> + |dn>)/sqrt 2) on each emitter
    psi(3 * kUp + kUp) = amp;
    psi(3 * kUp + kDown) = amp;
    psi(3 * kDown + kUp) = amp;
    psi(3 * kDown + kDown) = amp;
    Matrix9 rho0 = excitation_pulse(psi * psi.adjoint());
    const MatrixX flip_evolution = matrix_exp(MatrixX(liou.conditional() * delta_t));
    // The round-1 window closes, the microwave flip runs for delta_t, and
    // only then the reset pulse fires; exciting earlier would pump decay
    // products from the flip period back into the second window.
    return run_patterns(liou, rho0, detection_time, [&](const Matrix9& rho) {
        return excitation_pulse(spin_flip(apply_super(flip_evolution, rho)));
    });
}

} // namespace tqgate
