#pragma once

#include <array>

#include "tqgate/params.hpp"
#include "tqgate/superop.hpp"

namespace tqgate {

// Photon-count-decomposition engine for the interference-based schemes. The
// two emitters are three-level systems {up, down, e} with the cavity
// adiabatically eliminated (bad-cavity regime): each emitter decays at the
// enhanced rate gamma', of which the fraction eta' reaches the detectors
// through the beam-splitter modes d_pm = sqrt(eta' gamma'/2) (s_A +- s_B).
// Full Liouville space: 81 dimensions.
//
// The master-equation solution is decomposed over cumulative detector count
// records: the no-jump generator L_c drops the recycling terms of d_pm only,
// and a window with exactly one click is S_pm applied to the time-integrated
// no-jump propagator (the record terminates the window at the click, the
// emission-to-detection delay being zero for a local gate).

enum class Detector { left, right };

// Single-emitter basis indices.
inline constexpr int kUp = 0;
inline constexpr int kDown = 1;
inline constexpr int kExcited = 2;

struct ConditionalState {
    Matrix9 rho = Matrix9::Zero(); // unnormalized
    Detector early = Detector::left;
    Detector late = Detector::left;

    double trace() const { return rho.trace().real(); }
    // Smallest eigenvalue of the Hermitized state (PSD check).
    double min_eigenvalue() const;
};

class TwoEmitterLiouvillian {
  public:
    // Lindblad channels per emitter i with lowering operator s_i = |dn><e|:
    //   detected     d_pm = sqrt(eta' gamma'/2) (s_A pm s_B)
    //   undetected   sqrt((1 - eta') gamma') s_i
    //   optical dephasing  sqrt(2 gamma*) |e><e|_i
    //   spin dephasing     sqrt(gamma*_s/2) (|up><up| - |dn><dn|)_i
    //                  and sqrt(gamma*_s/2) |e><e|_i
    // The two spin channels place the up/down coherence decay at gamma*_s and
    // the up/e coherence decay at gamma*_s/2 per emitter, so the pair
    // coherence driving the interference decays at Gamma' + gamma*_s.
    TwoEmitterLiouvillian(const EmitterParams& emitter, const CavitySet& cavity,
                          const DetectionChain& det);

    const MatrixX& full() const { return full_; }
    const MatrixX& conditional() const { return conditional_; }
    const Matrix9& jump_op(Detector d) const {
        return d == Detector::left ? d_plus_ : d_minus_;
    }
    // Collapse superoperator S_pm rho = d_pm rho d_pm^dag.
    MatrixX collapse_superop(Detector d) const { return sandwich_superop(jump_op(d)); }

    // Exchanges the roles of the two detectors (d_+ <-> d_-).
    void swap_detectors() { std::swap(d_plus_, d_minus_); }

  private:
    MatrixX full_;        // 81 x 81
    MatrixX conditional_; // L_c
    Matrix9 d_plus_;
    Matrix9 d_minus_;
};

// One-click window of length tau starting from rho: S int_0^tau e^{L_c s} ds rho.
ConditionalState detection_window(const TwoEmitterLiouvillian& liou, Detector d,
                                  double tau, const Matrix9& rho);

// Two-sided conditional integral int_0^tau e^{L_c (tau-s)} S e^{L_c s} rho ds
// (the fixed-window form where the detector is read out at the end of the
// window), via the block-triangular exponential identity.
MatrixX conditional_integral(const MatrixX& l_c, const MatrixX& s, double tau);

// Instantaneous microwave pi pulse exchanging |up> and |dn> on both emitters.
Matrix9 spin_flip(const Matrix9& rho);

// Optical pi pulse on |dn> <-> |e| of both emitters (|dn> -> |e>, |e> -> -|dn>),
// with an optional common phase on the transition.
Matrix9 excitation_pulse(const Matrix9& rho, double phase = 0.0);

struct OracleResult {
    double efficiency = 0.0;
    double fidelity = 0.0;
    std::array<ConditionalState, 4> patterns;
};

// Feedback scheme: start from |ee>, one click per window, spin flip plus
// delta_t of no-jump evolution in between. Targets |psi+> when both clicks
// hit the same detector, |psi-> otherwise; the fidelity is the plain average
// over the four patterns.
OracleResult simulate_ibf(const EmitterParams& emitter, const CavitySet& cavity,
                          const DetectionChain& det, double detection_time,
                          double delta_t);

// Two-round scheme: start from the ground superposition, excite, detect;
// then evolve through the flip time, flip, re-excite, detect again. The
// re-excitation comes after the flip-time evolution so a decay during the
// microwave pulse is not pumped back into the emission window.
OracleResult simulate_ib(const EmitterParams& emitter, const CavitySet& cavity,
                         const DetectionChain& det, double detection_time,
                         double delta_t);

} // namespace tqgate
