#include "glbrown/gue_sde.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <iostream>

namespace glbrown {

double SimConfig::effective_dt() const {
  if (dt > 0) return dt;
  const double tmax = times.empty() ? 1.0 : times.back();
  return std::min(1e-3, tmax > 0 ? tmax / 1e3 : 1e-3);
}

void SimConfig::validate() const {
  if (N < 1) throw std::invalid_argument("SimConfig: N must be >= 1");
  if (paths < 1) throw std::invalid_argument("SimConfig: paths must be >= 1");
  if (r < 0 || s < 0) throw std::invalid_argument("SimConfig: r, s must be >= 0");
  if (dt < 0) throw std::invalid_argument("SimConfig: dt must be > 0");
  if (!std::is_sorted(times.begin(), times.end()))
    throw std::invalid_argument("SimConfig: times must be ascending");
  if (!times.empty() && times.front() < 0)
    throw std::invalid_argument("SimConfig: times must be >= 0");
  if (r == 0 || s == 0)
    std::cerr << "glbrown: warning: r or s is 0; the (r,s) metric degenerates, "
                 "integrating the SDE limit instead\n";
}

DriverIncrement sample_increment(int N, double dt, Rng& rng) {
  if (dt <= 0) throw std::invalid_argument("sample_increment: dt must be > 0");
  DriverIncrement inc;
  inc.dt = dt;
  const double sd = std::sqrt(dt / N);        // diagonal entries
  const double so = std::sqrt(dt / (2.0 * N));  // off-diagonal re/im parts
  for (CMatrix* m : {&inc.dx, &inc.dy}) {
    *m = CMatrix::Zero(N, N);
    for (int j = 0; j < N; ++j) (*m)(j, j) = sd * rng.gaussian();
    for (int j = 0; j < N; ++j)
      for (int k = j + 1; k < N; ++k) {
        const Complex z(so * rng.gaussian(), so * rng.gaussian());
        (*m)(j, k) = z;
        (*m)(k, j) = std::conj(z);
      }
  }
  return inc;
}

namespace {

CMatrix driver(const DriverIncrement& inc, double r, double s) {
  return Complex(0, std::sqrt(r)) * inc.dx + std::sqrt(s) * inc.dy;
}

// exp(W) for a small-norm step matrix: fourth-order truncation in Horner
// form (three multiplies).  Used on the s > 0 geometric path.
CMatrix exp_taylor4(const CMatrix& w) {
  const int n = int(w.rows());
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix e = id + 0.25 * w;
  e = id + (w * e) / 3.0;
  e = id + 0.5 * (w * e);
  return id + w * e;
}

}  // namespace

CMatrix step(const CMatrix& b, const DriverIncrement& inc, double r, double s,
             Scheme scheme) {
  const CMatrix dw = driver(inc, r, s);
  CMatrix out;
  if (scheme == Scheme::Euler) {
    out = b + b * dw - 0.5 * (r - s) * inc.dt * b;
  } else if (s == 0.0) {
    out = b * dw.exp();  // anti-Hermitian dW: exactly unitary factor
  } else {
    out = b * exp_taylor4(dw);
  }
  if (!out.allFinite()) throw BlowupError(inc.dt);
  return out;
}

namespace {

MatrixPath integrate(const SimConfig& config, Rng& rng, bool inverse) {
  config.validate();
  const int N = config.N;
  const double h_max = config.effective_dt();

  MatrixPath path;
  CMatrix b = CMatrix::Identity(N, N);
  double t = 0;

  auto record = [&](double at) {
    path.times.push_back(at);
    path.samples.push_back(b);
  };

  record(0.0);
  for (double target : config.times) {
    if (target == 0) continue;  // already recorded
    const double span = target - t;
    if (span < 0) throw std::invalid_argument("simulate_path: times not ascending");
    if (span > 0) {
      const int nsub = std::max<int>(1, int(std::ceil(span / h_max - 1e-12)));
      const double h = span / nsub;
      for (int i = 0; i < nsub; ++i) {
        DriverIncrement inc = sample_increment(N, h, rng);
        try {
          if (!inverse) {
            b = step(b, inc, config.r, config.s, config.scheme);
          } else {
            const CMatrix dw = driver(inc, config.r, config.s);
            if (config.scheme == Scheme::Euler) {
              b = b - dw * b - 0.5 * (config.r - config.s) * h * b;
            } else if (config.s == 0.0) {
              b = (-dw).exp() * b;
            } else {
              b = exp_taylor4(-dw) * b;
            }
            if (!b.allFinite()) throw BlowupError(0);
          }
        } catch (const BlowupError&) {
          throw BlowupError(t + (i + 1) * h);
        }
        t += h;
      }
      t = target;  // absorb accumulated rounding
    }
    record(target);
  }

  if (config.want_increments && path.samples.size() > 1) {
    for (std::size_t j = 1; j < path.samples.size(); ++j) {
      PathIncrement pi;
      pi.t0 = path.times[j - 1];
      pi.t1 = path.times[j];
      pi.value = path.samples[j - 1].partialPivLu().solve(path.samples[j]);
      path.increments.push_back(std::move(pi));
    }
  }
  return path;
}

}  // namespace

MatrixPath simulate_path(const SimConfig& config, Rng& rng) {
  return integrate(config, rng, false);
}

MatrixPath simulate_inverse_path(const SimConfig& config, Rng& rng) {
  return integrate(config, rng, true);
}

}  // namespace glbrown
