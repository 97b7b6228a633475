#include "hgda/kk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hgda {

void KkParams::validate() const {
  if (!(K > 0.0)) throw std::invalid_argument("KK spring constant must be > 0");
  if (!(L0 > 0.0)) throw std::invalid_argument("KK canvass side must be > 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("KK epsilon must be > 0");
  if (max_inner < 1) throw std::invalid_argument("KK inner iteration cap must be >= 1");
  if (!(jitter > 0.0)) throw std::invalid_argument("KK jitter must be > 0");
}

SpringSystem build_springs(const DistanceMatrix& d, const KkParams& params) {
  params.validate();
  SpringSystem s;
  s.n = d.size();
  if (s.trivial()) return s;
  if (!d.connected()) throw std::invalid_argument("spring system needs a connected distance matrix");

  const double diameter = d.diameter();
  s.L = params.L0 / diameter;
  s.length.assign(s.n * s.n, 0.0);
  s.strength.assign(s.n * s.n, 0.0);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) {
      if (i == j) continue;
      const double dij = d(i, j);
      if (!(dij > 0.0)) throw std::invalid_argument("distinct vertices need positive distance");
      s.length[i * s.n + j] = s.L * dij;
      s.strength[i * s.n + j] = params.K / (dij * dij);
    }
  return s;
}

Layout initial_circle_layout(std::size_t n, const KkParams& params, std::uint64_t seed) {
  params.validate();
  Layout layout;
  layout.canvass = params.L0;
  const Point center{params.L0 / 2, params.L0 / 2};
  if (n == 1) {
    layout.positions.push_back(center);
    return layout;
  }
  const double radius = params.L0 / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  layout.positions.reserve(n);
  while (layout.positions.size() < n) {
    const double a = angle(rng);
    const Point p{center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
    const bool collides = std::any_of(layout.positions.begin(), layout.positions.end(),
                                      [&](Point q) { return distance(p, q) < params.jitter; });
    if (!collides) layout.positions.push_back(p);
  }
  return layout;
}

double energy(const Layout& layout, const SpringSystem& s) {
  double e = 0.0;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j) {
      const double stretch = distance(layout.positions[i], layout.positions[j]) - s.l(i, j);
      e += s.k(i, j) * stretch * stretch;
    }
  return 0.5 * e;
}

namespace {

double incident_energy_at(const Layout& layout, const SpringSystem& s, std::size_t m, Point at) {
  double e = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (i == m) continue;
    const double stretch = distance(at, layout.positions[i]) - s.l(m, i);
    e += s.k(m, i) * stretch * stretch;
  }
  return 0.5 * e;
}

struct Hessian {
  double xx = 0.0, xy = 0.0, yy = 0.0;
};

Hessian hessian(const Layout& layout, const SpringSystem& s, std::size_t m) {
  Hessian h;
  const Point pm = layout.positions[m];
  for (std::size_t i = 0; i < s.n; ++i) {
    if (i == m) continue;
    const double dx = pm.x - layout.positions[i].x;
    const double dy = pm.y - layout.positions[i].y;
    const double dist = std::hypot(dx, dy);
    const double cube = dist * dist * dist;
    const double k = s.k(m, i);
    const double l = s.l(m, i);
    h.xx += k * (1.0 - l * dy * dy / cube);
    h.yy += k * (1.0 - l * dx * dx / cube);
    h.xy += k * l * dx * dy / cube;
  }
  return h;
}

// Shrinks delta until the incident energy does not increase.
bool settle(const Layout& layout, const SpringSystem& s, std::size_t m, Point delta, NewtonStep& step) {
  const Point origin = layout.positions[m];
  const double before = incident_energy_at(layout, s, m, origin);
  for (int h = 0; h <= 20; ++h) {
    const Point candidate = origin + delta;
    if (incident_energy_at(layout, s, m, candidate) <= before) {
      step.position = candidate;
      step.halvings = h;
      return true;
    }
    delta = 0.5 * delta;
  }
  return false;
}

}  // namespace

double incident_energy(const Layout& layout, const SpringSystem& s, std::size_t m) {
  return incident_energy_at(layout, s, m, layout.positions[m]);
}

Gradient gradient(const Layout& layout, const SpringSystem& s, std::size_t m) {
  Gradient g;
  const Point pm = layout.positions[m];
  for (std::size_t i = 0; i < s.n; ++i) {
    if (i == m) continue;
    const double dx = pm.x - layout.positions[i].x;
    const double dy = pm.y - layout.positions[i].y;
    const double dist = std::hypot(dx, dy);
    if (dist == 0.0) throw std::domain_error("vertices " + std::to_string(m) + " and " +
                                             std::to_string(i) + " coincide");
    const double k = s.k(m, i);
    const double l = s.l(m, i);
    g.x += k * (dx - l * dx / dist);
    g.y += k * (dy - l * dy / dist);
  }
  return g;
}

NewtonStep newton_step(const Layout& layout, const SpringSystem& s, std::size_t m,
                       const KkParams& params) {
  const Gradient g = gradient(layout, s, m);
  const double norm = g.norm();
  if (norm <= params.epsilon)
    throw std::invalid_argument("newton_step on a vertex already within epsilon");

  NewtonStep step;
  step.position = layout.positions[m];
  const Hessian h = hessian(layout, s, m);
  const double det = h.xx * h.yy - h.xy * h.xy;
  const Point descent = (-std::min(s.L / 10.0, norm) / norm) * Point{g.x, g.y};

  if (h.xx > 0.0 && h.yy > 0.0 && det > 0.0 && std::isfinite(det)) {
    const Point delta{(-g.x * h.yy + g.y * h.xy) / det, (-g.y * h.xx + g.x * h.xy) / det};
    if (settle(layout, s, m, delta, step)) return step;
  }
  step.used_newton = false;
  if (settle(layout, s, m, descent, step)) return step;
  step.position = layout.positions[m];
  step.accepted = false;
  return step;
}

KkResult kk_layout(const DistanceMatrix& d, const KkParams& params, std::uint64_t seed) {
  params.validate();
  KkResult result;
  const std::size_t n = d.size();
  result.layout.canvass = params.L0;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  result.layout = initial_circle_layout(n, params, seed);
  if (n == 1) {
    result.converged = true;
    return result;
  }

  const SpringSystem s = build_springs(d, params);
  const std::size_t max_outer = params.max_outer ? params.max_outer : 10 * n;
  std::mt19937_64 jitter_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  auto& pos = result.layout.positions;

  // nudges m off any vertex it sits on
  auto separate = [&](std::size_t m) {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == m || !(pos[i] == pos[m])) continue;
        const double a = angle(jitter_rng);
        pos[m] = pos[m] + params.jitter * Point{std::cos(a), std::sin(a)};
        ++result.jitter_events;
        moved = true;
      }
    }
  };

  std::vector<double> norms(n);
  if (params.record_energy) result.energy_trace.push_back(energy(result.layout, s));
  for (;;) {
    for (std::size_t m = 0; m < n; ++m) {
      separate(m);
      norms[m] = gradient(result.layout, s, m).norm();
    }
    const auto worst = std::max_element(norms.begin(), norms.end());  // first max = lowest id
    result.max_gradient = *worst;
    if (*worst <= params.epsilon) {
      result.converged = true;
      break;
    }
    if (result.selections >= max_outer) break;
    ++result.selections;

    const auto m = static_cast<std::size_t>(worst - norms.begin());
    for (int inner = 0; inner < params.max_inner; ++inner) {
      separate(m);
      if (gradient(result.layout, s, m).norm() <= params.epsilon) break;
      const NewtonStep step = newton_step(result.layout, s, m, params);
      if (!step.accepted) {
        ++result.rejected_steps;
        break;
      }
      pos[m] = step.position;
      ++result.newton_steps;
      if (params.record_energy) result.energy_trace.push_back(energy(result.layout, s));
    }
  }
  return result;
}

}  // namespace hgda
