/**
 * @file position_optimizer.cpp
 */
#include "fluidbeam/position_optimizer.hpp"

#include <numbers>

namespace fluidbeam {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PositionObjectiveContext make_position_context(const CMatrix& B, const BeamformingMatrix& W,
                                               const CVector& t_row,
                                               const std::vector<PathAngles>& receive_angles,
                                               double wavelength) {
  if (static_cast<Eigen::Index>(receive_angles.size()) != B.rows())
    throw std::invalid_argument("make_position_context: angle count must match rows of B");
  if (W.rows() != B.cols() || W.cols() != t_row.size())
    throw std::invalid_argument("make_position_context: dimension mismatch between B, W, t_row");

  PositionObjectiveContext ctx;
  ctx.B = B;
  ctx.t_row = t_row;
  ctx.receive_angles = receive_angles;
  ctx.wavelength = wavelength;
  const Eigen::Index lr = B.rows();
  const Eigen::Index k_users = W.cols();
  ctx.d.reserve(static_cast<std::size_t>(k_users));
  ctx.C.reserve(static_cast<std::size_t>(k_users));
  for (Eigen::Index q = 0; q < k_users; ++q) {
    CVector dq = B.conjugate() * W.col(q);
    ctx.C.push_back(dq * dq.adjoint());
    ctx.d.push_back(std::move(dq));
  }
  ctx.dir_x.resize(lr);
  ctx.dir_y.resize(lr);
  for (Eigen::Index l = 0; l < lr; ++l) {
    const PathAngles& a = receive_angles[static_cast<std::size_t>(l)];
    ctx.dir_x(l) = std::sin(a.elevation) * std::cos(a.azimuth);
    ctx.dir_y(l) = std::cos(a.elevation);
  }
  return ctx;
}

double objective_g(Position u, const PositionObjectiveContext& ctx) {
  const Eigen::Index lr = ctx.num_paths();
  const double k0 = kTwoPi / ctx.wavelength;
  Eigen::VectorXd phase = k0 * (u.x * ctx.dir_x + u.y * ctx.dir_y);  // 2pi/lambda rho_l(u)

  double total = 0.0;
  for (Eigen::Index q = 0; q < ctx.num_users(); ++q) {
    const CMatrix& c = ctx.C[static_cast<std::size_t>(q)];
    const CVector& d = ctx.d[static_cast<std::size_t>(q)];
    const Complex tq = ctx.t_row(q);
    double acc = std::norm(tq);
    for (Eigen::Index l = 0; l < lr; ++l) acc += c(l, l).real();
    for (Eigen::Index i = 0; i + 1 < lr; ++i) {
      for (Eigen::Index j = i + 1; j < lr; ++j) {
        const double xi = phase(i) - phase(j);
        acc += 2.0 * std::abs(c(i, j)) * std::cos(xi + std::arg(c(i, j)));
      }
    }
    const double t_mag = std::abs(tq);
    const double t_arg = std::arg(tq);
    for (Eigen::Index l = 0; l < lr; ++l)
      acc -= 2.0 * t_mag * std::abs(d(l)) * std::cos(phase(l) + std::arg(d(l)) - t_arg);
    total += acc;
  }
  return total;
}

Eigen::Vector2d gradient_g(Position u, const PositionObjectiveContext& ctx) {
  const Eigen::Index lr = ctx.num_paths();
  const double k0 = kTwoPi / ctx.wavelength;
  Eigen::VectorXd phase = k0 * (u.x * ctx.dir_x + u.y * ctx.dir_y);

  double gx = 0.0;
  double gy = 0.0;
  for (Eigen::Index q = 0; q < ctx.num_users(); ++q) {
    const CMatrix& c = ctx.C[static_cast<std::size_t>(q)];
    const CVector& d = ctx.d[static_cast<std::size_t>(q)];
    const Complex tq = ctx.t_row(q);
    for (Eigen::Index i = 0; i + 1 < lr; ++i) {
      for (Eigen::Index j = i + 1; j < lr; ++j) {
        const double xi = phase(i) - phase(j);
        const double s = -2.0 * std::abs(c(i, j)) * std::sin(xi + std::arg(c(i, j))) * k0;
        gx += s * (ctx.dir_x(i) - ctx.dir_x(j));
        gy += s * (ctx.dir_y(i) - ctx.dir_y(j));
      }
    }
    const double t_mag = std::abs(tq);
    if (t_mag == 0.0) continue;
    const double t_arg = std::arg(tq);
    for (Eigen::Index l = 0; l < lr; ++l) {
      const double s = 2.0 * t_mag * std::abs(d(l)) *
                       std::sin(phase(l) + std::arg(d(l)) - t_arg) * k0;
      gx += s * ctx.dir_x(l);
      gy += s * ctx.dir_y(l);
    }
  }
  return {gx, gy};
}

Eigen::Matrix2d hessian_g(Position u, const PositionObjectiveContext& ctx) {
  const Eigen::Index lr = ctx.num_paths();
  const double k0 = kTwoPi / ctx.wavelength;
  const double k2 = k0 * k0;  // 4 pi^2 / lambda^2
  Eigen::VectorXd phase = k0 * (u.x * ctx.dir_x + u.y * ctx.dir_y);

  double hxx = 0.0;
  double hyy = 0.0;
  double hxy = 0.0;
  for (Eigen::Index q = 0; q < ctx.num_users(); ++q) {
    const CMatrix& c = ctx.C[static_cast<std::size_t>(q)];
    const CVector& d = ctx.d[static_cast<std::size_t>(q)];
    const Complex tq = ctx.t_row(q);
    const double t_mag = std::abs(tq);
    const double t_arg = std::arg(tq);
    if (t_mag > 0.0) {
      for (Eigen::Index l = 0; l < lr; ++l) {
        const double f2 = 2.0 * t_mag * std::abs(d(l)) *
                          std::cos(phase(l) + std::arg(d(l)) - t_arg);
        hxx += f2 * ctx.dir_x(l) * ctx.dir_x(l);
        hyy += f2 * ctx.dir_y(l) * ctx.dir_y(l);
        hxy += f2 * ctx.dir_x(l) * ctx.dir_y(l);
      }
    }
    for (Eigen::Index i = 0; i + 1 < lr; ++i) {
      for (Eigen::Index j = i + 1; j < lr; ++j) {
        const double xi = phase(i) - phase(j);
        const double f1 = 2.0 * std::abs(c(i, j)) * std::cos(xi + std::arg(c(i, j)));
        const double ax = ctx.dir_x(i) - ctx.dir_x(j);
        const double ay = ctx.dir_y(i) - ctx.dir_y(j);
        hxx -= f1 * ax * ax;
        hyy -= f1 * ay * ay;
        hxy -= f1 * ax * ay;
      }
    }
  }
  Eigen::Matrix2d h;
  h << k2 * hxx, k2 * hxy, k2 * hxy, k2 * hyy;
  return h;
}

double delta_k(const PositionObjectiveContext& ctx) {
  const Eigen::Index lr = ctx.num_paths();
  const double k0 = kTwoPi / ctx.wavelength;
  double total = 0.0;
  for (Eigen::Index q = 0; q < ctx.num_users(); ++q) {
    const CMatrix& c = ctx.C[static_cast<std::size_t>(q)];
    const CVector& d = ctx.d[static_cast<std::size_t>(q)];
    const double t_mag = std::abs(ctx.t_row(q));
    for (Eigen::Index l = 0; l < lr; ++l) total += t_mag * std::abs(d(l));
    // inner sum over the full j range, as an over-approximation of the
    // strictly-upper-triangular mass; keeps delta a curvature majorant
    for (Eigen::Index i = 0; i + 1 < lr; ++i)
      for (Eigen::Index j = 0; j < lr; ++j) total += std::abs(c(i, j));
  }
  return 4.0 * k0 * k0 * total;  // 16 pi^2 / lambda^2
}

Position sca_optimize_position(Position u0, const PositionObjectiveContext& ctx,
                               const ScaSettings& settings) {
  if (settings.max_iters < 1 || !(settings.rel_tol > 0.0))
    throw std::invalid_argument("sca_optimize_position: invalid settings");
  if (!settings.region.contains(u0))
    throw std::invalid_argument("sca_optimize_position: start point outside region");
  if (settings.region.is_point()) return u0;

  const double delta = delta_k(ctx);
  if (delta == 0.0) return u0;  // g is constant

  Position u = u0;
  double g = objective_g(u, ctx);
  for (int it = 0; it < settings.max_iters; ++it) {
    const Eigen::Vector2d grad = gradient_g(u, ctx);
    const Position next =
        settings.region.clamp({u.x - grad(0) / delta, u.y - grad(1) / delta});
    const double g_next = objective_g(next, ctx);
    if (g_next <= g) u = next;            // majorization guarantees this up to roundoff
    if (g - g_next <= settings.rel_tol * std::abs(g)) break;
    g = g_next;
  }
  return u;
}

}  // namespace fluidbeam
