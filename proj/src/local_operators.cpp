#include "curvlab/local_operators.hpp"

#include <limits>

namespace curvlab {

double VertexFunction::at(const VertexId& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) {
    throw MissingValueError("function has no value at vertex " + v.to_string());
  }
  return it->second;
}

VertexFunction VertexFunction::shifted(double c) const {
  VertexFunction out = *this;
  for (auto& [_, value] : out.values_) value += c;
  return out;
}

VertexFunction VertexFunction::scaled(double s) const {
  VertexFunction out = *this;
  for (auto& [_, value] : out.values_) value *= s;
  return out;
}

namespace local {

double laplacian(const Graph& g, const Eigen::VectorXd& f, int v) {
  double sum = 0.0;
  for (int w : g.neighbors(v)) sum += f[w] - f[v];
  return sum;
}

double gamma(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h, int v) {
  const Eigen::VectorXd fh = f.cwiseProduct(h);
  return 0.5 * (laplacian(g, fh, v) - laplacian(g, f, v) * h[v] - f[v] * laplacian(g, h, v));
}

double gamma2(const Ball& b, const Eigen::VectorXd& f, const Eigen::VectorXd& h) {
  const Graph& g = b.graph;
  const int inner = 1 + b.first_size;
  constexpr double kUnused = std::numeric_limits<double>::quiet_NaN();

  // Γ(f,h), Δf and Δh are only ever read on {x} ∪ N1; the remaining
  // entries stay NaN so that an out-of-range read poisons the result.
  Eigen::VectorXd gamma_fh = Eigen::VectorXd::Constant(b.size(), kUnused);
  Eigen::VectorXd lap_f = Eigen::VectorXd::Constant(b.size(), kUnused);
  Eigen::VectorXd lap_h = Eigen::VectorXd::Constant(b.size(), kUnused);
  for (int v = 0; v < inner; ++v) {
    gamma_fh[v] = gamma(g, f, h, v);
    lap_f[v] = laplacian(g, f, v);
    lap_h[v] = laplacian(g, h, v);
  }
  return 0.5 * (laplacian(g, gamma_fh, 0) - gamma(g, lap_f, h, 0) - gamma(g, f, lap_h, 0));
}

std::pair<double, double> ph_sides(const Ball& b, const Eigen::VectorXd& f, double K) {
  const Graph& g = b.graph;
  const int first_end = 1 + b.first_size;
  double lhs = 0.0;
  for (int z = first_end; z < b.size(); ++z) {
    for (int y : g.neighbors(z)) {
      if (y == 0 || y >= first_end) continue;
      const double zy = f[z] - f[y];
      lhs += 0.25 * zy * zy - 0.5 * zy * (f[y] - f[0]);
    }
  }
  for (int y = 1; y < first_end; ++y) {
    for (int w : g.neighbors(y)) {
      if (w > y && w < first_end) lhs += (f[y] - f[w]) * (f[y] - f[w]);
    }
  }
  const double degree = g.degree(0);
  const double lap = laplacian(g, f, 0);
  const double rhs = (2.0 * K + degree - 3.0) / 2.0 * gamma(g, f, f, 0) - 0.5 * lap * lap;
  return {lhs, rhs};
}

Eigen::VectorXd gather(const Ball& b, const VertexFunction& f) {
  Eigen::VectorXd out(b.size());
  for (int i = 0; i < b.size(); ++i) out[i] = f.at(b.ids[i]);
  return out;
}

}  // namespace local

double laplacian_at(const NeighborOracle& o, const VertexFunction& f, const VertexId& x) {
  const double fx = f.at(x);
  double sum = 0.0;
  for (const VertexId& y : o.neighbors(x)) sum += f.at(y) - fx;
  return sum;
}

double gamma_at(const NeighborOracle& o, const VertexFunction& f, const VertexFunction& g,
                const VertexId& x) {
  const auto nbrs = o.neighbors(x);
  const double fx = f.at(x);
  const double gx = g.at(x);
  double lap_fg = 0.0;
  double lap_f = 0.0;
  double lap_g = 0.0;
  for (const VertexId& y : nbrs) {
    const double fy = f.at(y);
    const double gy = g.at(y);
    lap_fg += fy * gy - fx * gx;
    lap_f += fy - fx;
    lap_g += gy - gx;
  }
  return 0.5 * (lap_fg - lap_f * gx - fx * lap_g);
}

double gamma2_at(const NeighborOracle& o, const VertexFunction& f, const VertexFunction& g,
                 const VertexId& x) {
  const Ball b = ball(o, x, 2);
  return local::gamma2(b, local::gather(b, f), local::gather(b, g));
}

std::pair<double, double> ph_sides(const NeighborOracle& o, const VertexFunction& f,
                                   const VertexId& x, double K) {
  const Ball b = ball(o, x, 2);
  return local::ph_sides(b, local::gather(b, f), K);
}

}  // namespace curvlab
