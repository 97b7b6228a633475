#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hgda/distance.hpp"
#include "hgda/layout.hpp"

namespace hgda {

struct KkParams {
  double K = 1.0;           // spring scale constant
  double L0 = 1.0;          // canvass side
  double epsilon = 1e-4;    // gradient-norm threshold
  std::size_t max_outer = 0;  // vertex selections; 0 means 10 * n
  int max_inner = 50;       // Newton steps per selected vertex
  double jitter = 1e-6;     // displacement used to separate coincident vertices
  bool record_energy = false;

  void validate() const;
};

/// Rest lengths l_ij = L * d_ij and strengths k_ij = K / d_ij^2, with
/// L = L0 / max d_ij.
struct SpringSystem {
  std::size_t n = 0;
  double L = 0.0;
  std::vector<double> length;    // row-major n*n
  std::vector<double> strength;  // row-major n*n

  bool trivial() const noexcept { return n < 2; }
  double l(std::size_t i, std::size_t j) const { return length[i * n + j]; }
  double k(std::size_t i, std::size_t j) const { return strength[i * n + j]; }
};

struct Gradient {
  double x = 0.0;
  double y = 0.0;
  double norm() const { return std::hypot(x, y); }
};

/// Requires finite distances. A single vertex yields a trivial system.
SpringSystem build_springs(const DistanceMatrix& d, const KkParams& params);

/// Seeded random angles on the circle of radius L0/2 around the canvass
/// center; no two vertices closer than the jitter distance.
Layout initial_circle_layout(std::size_t n, const KkParams& params, std::uint64_t seed);

/// E = 1/2 sum_{i<j} k_ij (D_ij - l_ij)^2.
double energy(const Layout& layout, const SpringSystem& s);

/// The part of energy() contributed by springs incident to m.
double incident_energy(const Layout& layout, const SpringSystem& s, std::size_t m);

/// Partial derivatives of energy() with respect to (x_m, y_m). Throws
/// std::domain_error when another vertex coincides with m.
Gradient gradient(const Layout& layout, const SpringSystem& s, std::size_t m);

struct NewtonStep {
  Point position;       // new location of m (unchanged when rejected)
  bool used_newton = true;  // false when the Hessian forced a gradient step
  int halvings = 0;
  bool accepted = true;
};

/// One modified Newton–Raphson move of vertex m: solve H * delta = -g on the
/// 2x2 Hessian of energy() at m, falling back to a gradient step of length
/// min(L/10, |g|) when H is not positive definite. delta is halved (up to 20
/// times) while the incident energy would increase. Throws
/// std::invalid_argument when |g| <= epsilon already.
NewtonStep newton_step(const Layout& layout, const SpringSystem& s, std::size_t m,
                       const KkParams& params);

struct KkResult {
  Layout layout;
  bool converged = false;
  double max_gradient = 0.0;  // max_m |grad_m| on the returned layout
  std::size_t selections = 0;
  std::size_t newton_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t jitter_events = 0;
  std::vector<double> energy_trace;  // initial energy, then after every accepted step (if recorded)
};

/// Kamada–Kawai layout of a connected distance matrix. Repeatedly picks the
/// vertex with the largest gradient norm (lowest id on ties) and moves it by
/// Newton steps until its gradient drops to epsilon; stops once every
/// gradient is within epsilon or max_outer selections have been spent.
KkResult kk_layout(const DistanceMatrix& d, const KkParams& params, std::uint64_t seed);

}  // namespace hgda
