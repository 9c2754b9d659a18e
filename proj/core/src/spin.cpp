#include "cliffexp/spin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "cliffexp/algebra.hpp"
#include "cliffexp/errors.hpp"
#include "cliffexp/exp.hpp"

namespace cliffexp::spin {

namespace {

constexpr Signature kSig = Signature::Cl30;

void check_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be -1 or +1");
}

FieldConfig config_at(const RampSweep& sweep, int sigma, double b0) {
  return FieldConfig{b0, sweep.omega1 / sweep.gamma, sweep.omega, sigma, sweep.gamma};
}

double ramp_b0(const RampSweep& sweep, double t) {
  return sweep.b0_start + (sweep.b0_end - sweep.b0_start) * (t / sweep.duration);
}

}  // namespace

Multivector field_vector(const FieldConfig& cfg, double t) {
  check_sigma(cfg.sigma);
  const double wt = cfg.omega * t;
  return Multivector(kSig, {0.0, cfg.b1 * std::cos(wt), cfg.sigma * cfg.b1 * std::sin(wt), cfg.b0,
                            0.0, 0.0, 0.0, 0.0});
}

Multivector frame_rotor(const FieldConfig& cfg, double t) {
  check_sigma(cfg.sigma);
  const double half = 0.5 * cfg.sigma * cfg.omega * t;
  return Multivector::central(kSig, std::cos(half), 0.0).with(Blade::E12, -std::sin(half));
}

Multivector frame_generator(const FieldConfig& cfg) {
  check_sigma(cfg.sigma);
  return Multivector::basis(kSig, Blade::E12, cfg.sigma * cfg.omega + cfg.omega0())
      .with(Blade::E23, cfg.omega1());
}

double rabi_frequency(const FieldConfig& cfg) {
  return std::hypot(cfg.sigma * cfg.omega + cfg.omega0(), cfg.omega1());
}

Multivector evolve_spinor(const FieldConfig& cfg, double t, const Multivector& psi0) {
  if (psi0.signature() != kSig) throw UnsupportedSignature("spinor evolution", psi0.signature());
  const double norm = (psi0 * reverse(psi0)).scalar_part();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("initial spinor is not normalized (psi psi~ = " +
                                std::to_string(norm) + ")");
  }
  return frame_rotor(cfg, t) * exp(frame_generator(cfg) * (0.5 * t)) * psi0;
}

Multivector down_component(const Multivector& psi) {
  const Multivector e12 = Multivector::basis(psi.signature(), Blade::E12);
  const Multivector e13 = Multivector::basis(psi.signature(), Blade::E13);
  const double along_e13 = -(e13 * psi).scalar_part();
  const double along_e23 = (e13 * psi * e12).scalar_part();
  return Multivector::scalar(psi.signature(), along_e13).with(Blade::E12, along_e23);
}

double projected_down_probability(const Multivector& psi) {
  const Multivector down = down_component(psi);
  return (down * reverse(down)).scalar_part();
}

double down_probability(const FieldConfig& cfg, double t) {
  check_sigma(cfg.sigma);
  const double alpha = rabi_frequency(cfg);
  if (alpha == 0.0) return 0.0;
  const double amp = cfg.omega1() * std::sin(0.5 * alpha * t) / alpha;
  return amp * amp;
}

ProbabilityTrace sweep_ramp(const RampSweep& sweep, int sigma, SweepMode mode, unsigned threads) {
  check_sigma(sigma);
  if (sweep.samples < 2) throw std::invalid_argument("a ramp needs at least 2 samples");
  if (!(sweep.duration > 0.0)) throw std::invalid_argument("ramp duration must be positive");

  const std::size_t n = static_cast<std::size_t>(sweep.samples);
  const double dt = sweep.duration / static_cast<double>(n - 1);
  ProbabilityTrace trace;
  trace.times.resize(n);
  trace.b0.resize(n);
  trace.p_down.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    trace.times[k] = (k + 1 == n) ? sweep.duration : dt * static_cast<double>(k);
    trace.b0[k] = ramp_b0(sweep, trace.times[k]);
  }

  if (mode == SweepMode::PiecewiseStepping) {
    // Rotating-frame state φ = S̃ψ; P↓ is unchanged by the frame rotor.
    Multivector phi = Multivector::scalar(kSig, 1.0);
    trace.p_down[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      const double h = trace.times[k] - trace.times[k - 1];
      const double mid = ramp_b0(sweep, trace.times[k - 1] + 0.5 * h);
      phi = exp(frame_generator(config_at(sweep, sigma, mid)) * (0.5 * h)) * phi;
      trace.p_down[k] = projected_down_probability(phi);
    }
    return trace;
  }

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      trace.p_down[k] = down_probability(config_at(sweep, sigma, trace.b0[k]), trace.times[k]);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    fill(0, n);
    return trace;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    pool.emplace_back(fill, begin, std::min(n, begin + chunk));
  }
  for (auto& worker : pool) worker.join();
  return trace;
}

void write_csv(std::ostream& out, const ProbabilityTrace& trace) {
  out << "t,b0,p_down\n";
  char line[96];
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", trace.times[k], trace.b0[k],
                  trace.p_down[k]);
    out << line;
  }
}

}  // namespace cliffexp::spin
