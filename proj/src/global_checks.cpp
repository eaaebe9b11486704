#include "ricciforge/global_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ricciforge/quadrature.hpp"
#include "ricciforge/sampling.hpp"

namespace ricciforge {

namespace {

double tube_distance(const SpherePoint& x) {
  // distance to F0 is asin|z2|, to F1 is asin|z1|
  const double d0 = std::asin(std::min(1.0, x.abs_z2()));
  const double d1 = std::asin(std::min(1.0, x.abs_z1()));
  return std::min(d0, d1);
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t) {
  const double theta = geodesic_distance(a, b);
  if (theta < 1e-12) return a;
  const double s = std::sin(theta);
  return SpherePoint((std::sin((1.0 - t) * theta) * a.vec() + std::sin(t * theta) * b.vec()) / s);
}

}  // namespace

VLambdaReport vlambda_closeness(int k, double lambda, double r, double delta,
                                int samples, std::uint64_t seed) {
  if (!(r > 0.0 && r < 0.5)) throw DomainError("vlambda_closeness: r outside (0, 0.5)");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("vlambda_closeness: delta outside (0,1)");

  PoleConfiguration cfg = make_pole_configuration(k, 1e-3);
  const Potential potential(cfg);
  const MetricParams params(k, lambda);
  const double d3 = delta * delta * delta;

  VLambdaReport rep;
  rep.k = k;
  rep.lambda = lambda;
  rep.r = r;
  rep.delta = delta;
  rep.samples = samples;
  rep.seed = seed;
  rep.worst_margin_inside = std::numeric_limits<double>::infinity();
  rep.worst_margin_outside = std::numeric_limits<double>::infinity();

  double worst_overall = std::numeric_limits<double>::infinity();
  for (const auto& x : sample_grid(samples, cfg, seed)) {
    const double u_k = potential.value(x, true);
    const double dev = std::abs(v_lambda(params, u_k) - 1.0);
    const bool inside = tube_distance(x) < r;
    const double allowance =
        inside ? d3 * (1.0 + 1.0 / x.abs_z1() + 1.0 / x.abs_z2()) : d3;
    const double margin = allowance - dev;
    if (inside) {
      rep.worst_margin_inside = std::min(rep.worst_margin_inside, margin);
    } else {
      rep.worst_margin_outside = std::min(rep.worst_margin_outside, margin);
    }
    if (margin < worst_overall) {
      worst_overall = margin;
      rep.worst_is_inside_tube = inside;
      rep.worst_value = dev;
    }
  }
  rep.passed = rep.worst_margin_inside >= 0.0 && rep.worst_margin_outside >= 0.0;
  return rep;
}

double certify_lambda_for_delta(int k, double r, double delta, int samples,
                                std::uint64_t seed) {
  for (double lambda = 2.0; lambda <= 1099511627776.0; lambda *= 2.0) {
    if (vlambda_closeness(k, lambda, r, delta, samples, seed).passed) return lambda;
  }
  throw NotFound("certify_lambda_for_delta: no Lambda <= 2^40 passes");
}

CurveLengthResult curve_length_gamma(int k, double lambda, std::complex<double> z1,
                                     double r, double delta, int panels) {
  if (!(r > 0.0 && r <= 0.2)) throw DomainError("curve_length_gamma: r outside (0, 0.2]");
  z1 /= std::abs(z1);

  const PoleConfiguration cfg = make_pole_configuration(k, 0.0);
  const Potential potential(cfg);
  const MetricParams params(k, lambda);

  const auto raw = [&](double t) {
    const double a = std::sqrt(1.0 - t * t);
    return Vector4(a * z1.real(), a * z1.imag(), t * t, 0.0);
  };
  const auto raw_deriv = [&](double t) {
    const double a = std::sqrt(1.0 - t * t);
    return Vector4(-t / a * z1.real(), -t / a * z1.imag(), 2.0 * t, 0.0);
  };
  const auto projected_speed = [&](double t) {
    const Vector4 g = raw(t);
    const Vector4 gp = raw_deriv(t);
    const double n = g.norm();
    const Vector4 hat_p = gp / n - g * (g.dot(gp)) / (n * n * n);
    return hat_p.norm();
  };

  // When z1 is a k-th root of unity the curve leaves a puncture at t = 0
  // (distance ~ (sqrt(5)/2) t^2); start the quadrature where the pole guard
  // clears and account for the skipped sliver with an explicit upper bound:
  // on (0, t0], sqrt(V_Lambda) |gamma'| <= 3 t (1 + C') + 3 / sqrt(k Lambda).
  double t0 = 1e-6;
  while (t0 < 1e-2 && cfg.min_pole_distance(SpherePoint(raw(t0))) < 1e-8) {
    t0 *= 1.25;
  }
  const double t1 = 2.0 * std::sqrt(r);
  const double head_bound = 3.0 * t0 * t0 + 3.0 * t0 / std::sqrt(k * lambda);

  CurveLengthResult out;
  out.bound = 6.0 * r + 24.0 * std::pow(delta, 1.5) * std::sqrt(r);

  // pointwise speed bound |gamma'| <= 3t, sampled densely
  out.max_speed_ratio = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double t = t0 + (t1 - t0) * i / 2000.0;
    out.max_speed_ratio = std::max(out.max_speed_ratio, projected_speed(t) / (3.0 * t));
  }
  out.speed_bound_ok = out.max_speed_ratio <= 1.0 + 1e-12;

  std::vector<double> nodes, weights;
  gauss_legendre(8, nodes, weights);
  double len = head_bound;
  for (int p = 0; p < panels; ++p) {
    const double a = t0 + (t1 - t0) * p / panels;
    const double b = t0 + (t1 - t0) * (p + 1) / panels;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      const double t = mid + half * nodes[q];
      const SpherePoint x(raw(t));
      const double u_k = potential.value(x, true);
      len += half * weights[q] * std::sqrt(v_lambda(params, u_k)) * projected_speed(t);
    }
  }
  out.length = len;
  out.length_bound_ok = len <= out.bound;
  out.end_abs_z2 = SpherePoint(raw(t1)).abs_z2();
  return out;
}

DiameterResult diameter_estimate(int k, double lambda, const DiameterOptions& opts) {
  if (opts.nodes < 100) throw DomainError("diameter_estimate: too few nodes");
  const PoleConfiguration cfg = make_pole_configuration(k, opts.exclusion);
  const Potential potential(cfg);
  const MetricParams params(k, lambda);

  const auto conf_factor = [&](const SpherePoint& x) -> double {
    if (opts.round_override) return 1.0;
    return std::sqrt(v_lambda(params, potential.value(x, true)));
  };

  const auto pts = sample_grid(opts.nodes, cfg, opts.seed);
  const int n = static_cast<int>(pts.size());
  const int n_poles = opts.round_override ? 0 : 2 * k;
  const int total = n + n_poles;

  struct Edge {
    int to;
    double w;
  };
  std::vector<std::vector<Edge>> adj(total);

  // k-nearest-neighbor edges with conformal midpoint weights
  double max_nn_gap = 0.0;
  {
    std::vector<std::pair<double, int>> row(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        row[j] = {i == j ? 1e30 : geodesic_distance(pts[i], pts[j]), j};
      }
      const int kk = std::min(opts.neighbors, n - 1);
      std::partial_sort(row.begin(), row.begin() + kk, row.end());
      max_nn_gap = std::max(max_nn_gap, row[0].first);
      for (int q = 0; q < kk; ++q) {
        const int j = row[q].second;
        if (j < i) continue;  // add each undirected edge once (plus symmetric misses)
        const double d = row[q].first;
        const bool near_pole =
            cfg.min_pole_distance(pts[i]) < opts.subdivide_radius ||
            cfg.min_pole_distance(pts[j]) < opts.subdivide_radius;
        const int pieces = near_pole ? 4 : 1;
        double w = 0.0;
        for (int s = 0; s < pieces; ++s) {
          const double t = (s + 0.5) / pieces;
          w += conf_factor(slerp(pts[i], pts[j], t)) * d / pieces;
        }
        adj[i].push_back({j, w});
        adj[j].push_back({i, w});
      }
    }
  }

  // pole super-nodes reached by radial conformal curves
  if (n_poles > 0) {
    std::vector<SpherePoint> poles;
    poles.insert(poles.end(), cfg.positive_poles.begin(), cfg.positive_poles.end());
    poles.insert(poles.end(), cfg.negative_poles.begin(), cfg.negative_poles.end());
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(32, gl_nodes, gl_weights);
    for (int p = 0; p < n_poles; ++p) {
      const SpherePoint& pole = poles[p];
      for (int i = 0; i < n; ++i) {
        const double d = geodesic_distance(pts[i], pole);
        if (d >= opts.pole_link_radius) continue;
        // radial cost int_0^d sqrt(V_Lambda) ds with s = t^2 so the
        // integrand stays bounded at the pole
        const Vector4 dir = (pts[i].vec() - std::cos(d) * pole.vec()) / std::sin(d);
        const double tmax = std::sqrt(d);
        double cost = 0.0;
        for (std::size_t q = 0; q < gl_nodes.size(); ++q) {
          const double t = 0.5 * tmax * (gl_nodes[q] + 1.0);
          const double s = t * t;
          if (s < 1e-10) continue;
          const SpherePoint y = exp_map(pole, dir, s);
          cost += 0.5 * tmax * gl_weights[q] * 2.0 * t * conf_factor(y);
        }
        adj[n + p].push_back({i, cost});
        adj[i].push_back({n + p, cost});
      }
    }
  }

  // farthest-point Dijkstra sweeps
  const auto dijkstra = [&](int src, std::vector<double>& dist) {
    dist.assign(total, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v]) continue;
      for (const auto& e : adj[v]) {
        if (dist[v] + e.w < dist[e.to]) {
          dist[e.to] = dist[v] + e.w;
          pq.push({dist[e.to], e.to});
        }
      }
    }
  };

  double graph_diam = 0.0;
  int src = 0;
  std::vector<double> dist;
  for (int sweep = 0; sweep < opts.sources; ++sweep) {
    dijkstra(src, dist);
    int far = src;
    double far_d = 0.0;
    for (int i = 0; i < total; ++i) {
      if (std::isinf(dist[i])) throw DisconnectedGraph("diameter graph is disconnected");
      if (dist[i] > far_d) {
        far_d = dist[i];
        far = i;
      }
    }
    graph_diam = std::max(graph_diam, far_d);
    src = far;
  }

  DiameterResult res;
  res.graph_diameter = graph_diam;
  res.estimate = graph_diam + opts.fiber_slack;
  res.max_nn_gap = max_nn_gap;
  res.nodes = n;
  return res;
}

}  // namespace ricciforge
