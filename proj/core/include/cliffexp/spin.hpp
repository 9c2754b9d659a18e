#pragma once

#include <iosfwd>
#include <vector>

#include "cliffexp/multivector.hpp"

namespace cliffexp::spin {

/// B(t) = b0 e3 + b1 (e1 cos ωt + σ e2 sin ωt) acting on a Cl30 spinor through
/// dψ/dt = ½ γ I B(t) ψ.
struct FieldConfig {
  double b0 = 0.0;
  double b1 = 0.0;
  double omega = 1.0;
  int sigma = 1;  // rotation sense, −1 clockwise, +1 anticlockwise
  double gamma = 1.0;

  double omega0() const { return gamma * b0; }
  double omega1() const { return gamma * b1; }
};

Multivector field_vector(const FieldConfig& cfg, double t);

/// S(t) = exp(−σ e12 ω t / 2). S̃ B(t) S = b1 e1 + b0 e3.
Multivector frame_rotor(const FieldConfig& cfg, double t);

/// Constant generator of the rotating-frame equation,
/// e12 (σω + ω0) + e23 ω1.
Multivector frame_generator(const FieldConfig& cfg);

/// √((σω + ω0)² + ω1²)
double rabi_frequency(const FieldConfig& cfg);

/// ψ(t) = S(t) exp(t Ω / 2) ψ(0). psi0 must satisfy ψψ̃ = 1 within 1e-10.
Multivector evolve_spinor(const FieldConfig& cfg, double t, const Multivector& psi0);

/// ψ↓ = −⟨e13 ψ⟩ + ⟨e13 ψ e12⟩ e12
Multivector down_component(const Multivector& psi);

/// ψ↓ ψ̃↓ from the projection.
double projected_down_probability(const Multivector& psi);

/// (ω1 sin(αt/2) / α)² for a spin starting up.
double down_probability(const FieldConfig& cfg, double t);

/// Linear ramp of b0 over [0, duration].
struct RampSweep {
  double b0_start = -2.0;
  double b0_end = 2.0;
  double duration = 500.0;
  int samples = 5000;
  double omega = 1.0;
  double omega1 = 0.05;
  double gamma = 1.0;
};

enum class SweepMode {
  /// Closed-form P↓ at each sample with b0 frozen at its ramp value and the
  /// time measured from the ramp start.
  Adiabatic,
  /// Exact propagation with b0 held constant over each sampling interval
  /// (value at the interval midpoint).
  PiecewiseStepping,
};

struct ProbabilityTrace {
  std::vector<double> times;
  std::vector<double> b0;
  std::vector<double> p_down;
};

/// threads > 1 splits Adiabatic samples across worker threads; output order
/// does not depend on it. PiecewiseStepping is sequential.
ProbabilityTrace sweep_ramp(const RampSweep& sweep, int sigma,
                            SweepMode mode = SweepMode::Adiabatic, unsigned threads = 1);

/// Header `t,b0,p_down`, 17 significant digits, LF line endings.
void write_csv(std::ostream& out, const ProbabilityTrace& trace);

}  // namespace cliffexp::spin
