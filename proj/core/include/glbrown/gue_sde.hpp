#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "glbrown/matrix.hpp"
#include "glbrown/rng.hpp"

namespace glbrown {

// A pair of independent Hermitian (GUE) Brownian increments over a step dt.
// Entry variances: diagonal dt/N; off-diagonal real and imaginary parts each
// dt/(2N), so that E tr(dX^2) = dt.
struct DriverIncrement {
  CMatrix dx;
  CMatrix dy;
  double dt = 0;
};

enum class Scheme { Euler, Geometric };

struct SimConfig {
  double r = 0.5;
  double s = 0.5;
  int N = 8;
  std::vector<double> times;  // ascending sample times
  double dt = 0;              // max step; 0 selects min(1e-3, t_max/1e3)
  Scheme scheme = Scheme::Geometric;
  std::uint64_t seed = 1;
  int paths = 1;
  bool want_increments = false;

  double effective_dt() const;
  void validate() const;
};

struct PathIncrement {
  double t0 = 0, t1 = 0;
  CMatrix value;  // B(t0)^{-1} B(t1)
};

struct MatrixPath {
  std::vector<double> times;
  std::vector<CMatrix> samples;
  std::vector<PathIncrement> increments;
};

// Integration failure: a step produced non-finite entries.
struct BlowupError : std::runtime_error {
  double time;
  explicit BlowupError(double t)
      : std::runtime_error("SDE blow-up at t = " + std::to_string(t) +
                           " (step too large?)"),
        time(t) {}
};

DriverIncrement sample_increment(int N, double dt, Rng& rng);

// One step of dB = B dW - (1/2)(r-s) B dt with dW = sqrt(r) i dX + sqrt(s) dY.
//
// Euler:      B' = B + B dW - (1/2)(r-s) B dt.
// Geometric:  B' = B exp(dW); the exponential supplies the Ito drift in
//             expectation, and for s = 0 it keeps B exactly unitary (dW is
//             then anti-Hermitian and the Pade exponential of an
//             anti-Hermitian matrix is unitary to rounding).  For s > 0 the
//             exponential is a fourth-order truncation, whose weak error
//             O(dt^2) per step sits far below the scheme's own O(dt) bias.
CMatrix step(const CMatrix& b, const DriverIncrement& inc, double r, double s,
             Scheme scheme);

MatrixPath simulate_path(const SimConfig& config, Rng& rng);

// Right-invariant companion dA = -dW A - (1/2)(r-s) A dt driven by the same
// increments; with coupled drivers A(t) B(t) tracks the identity.
MatrixPath simulate_inverse_path(const SimConfig& config, Rng& rng);

}  // namespace glbrown
