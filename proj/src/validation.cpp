#include "solitary/validation.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace solitary {

namespace {

// 4th-order central difference of f along coordinate `axis` (-1 means t).
template <class F>
double derivative(F&& f, const SpaceTimePoint& p, int axis, double e) {
  auto shifted = [&](double d) {
    SpaceTimePoint q = p;
    if (axis < 0) {
      q.t += d;
    } else {
      q.r[static_cast<std::size_t>(axis)] += d;
    }
    return f(q);
  };
  return (shifted(-2.0 * e) - 8.0 * shifted(-e) + 8.0 * shifted(e) - shifted(2.0 * e)) /
         (12.0 * e);
}

double scalar_arg(const SpaceTimePoint& p) { return p.r.front(); }

// Running maximum that keeps NaN once seen.
void raise_to(double& current, double value) {
  if (std::isnan(current)) {
    return;
  }
  if (std::isnan(value) || value > current) {
    current = value;
  }
}

}  // namespace

FieldModel model_1d(FlowCase c, const SolutionParams& p) {
  p.validate();
  FieldModel m;
  m.n = 1;
  m.g = p.g;
  m.k_h = c == FlowCase::euler ? 0.0 : p.k_h;
  m.h = [p](const SpaceTimePoint& q) { return eval_h(scalar_arg(q), q.t, p); };
  m.u = [p](const SpaceTimePoint& q, int) { return eval_u(scalar_arg(q), q.t, p); };
  m.h_e = [p, c](const SpaceTimePoint& q) { return exact_he(c, scalar_arg(q), q.t, p); };
  m.h_b = [p, c](const SpaceTimePoint& q) { return exact_hb(c, scalar_arg(q), q.t, p); };
  m.dhb_dr = [p, c](const SpaceTimePoint& q, int) {
    return exact_dhb_dx(c, scalar_arg(q), q.t, p);
  };
  return m;
}

FieldModel model_1d_ns_transcribed(const SolutionParams& p) {
  FieldModel m = model_1d(FlowCase::navier_stokes, p);
  m.h_e = [p](const SpaceTimePoint& q) { return transcribed::eval_he_ns(scalar_arg(q), q.t, p); };
  m.h_b = [p](const SpaceTimePoint& q) { return transcribed::eval_hb_ns(scalar_arg(q), q.t, p); };
  return m;
}

namespace {

FieldModel model_from(const SolutionParams& p,
                      AnalyticFields (*fields)(const SpaceTimePoint&, const SolutionParams&)) {
  p.validate();
  FieldModel m;
  m.n = p.n;
  m.g = p.g;
  m.k_h = p.k_h;
  m.h = [p](const SpaceTimePoint& q) { return eval_h(q, p); };
  m.u = [p](const SpaceTimePoint& q, int j) {
    return eval_u(q, p)[static_cast<std::size_t>(j)];
  };
  m.h_e = [p, fields](const SpaceTimePoint& q) { return fields(q, p).h_e; };
  m.h_b = [p, fields](const SpaceTimePoint& q) { return fields(q, p).h_b; };
  m.dhb_dr = [p, fields](const SpaceTimePoint& q, int j) {
    return fields(q, p).dhb_dr[static_cast<std::size_t>(j)];
  };
  return m;
}

}  // namespace

FieldModel model_ndim(const SolutionParams& p) { return model_from(p, &eval_ndim_fields); }

FieldModel model_ndim_transcribed(const SolutionParams& p) {
  return model_from(p, &transcribed::eval_ndim_fields);
}

std::vector<SpaceTimePoint> sample_points(int n, std::size_t count, std::uint64_t seed,
                                          double span) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-0.5 * span, 0.5 * span);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  std::vector<SpaceTimePoint> pts(count);
  for (auto& p : pts) {
    p.r.resize(static_cast<std::size_t>(n));
    for (auto& r : p.r) {
      r = coord(rng);
    }
    p.t = time(rng);
  }
  return pts;
}

ResidualSummary residual_audit(const FieldModel& m, std::span<const SpaceTimePoint> points,
                               double e) {
  ResidualSummary out;
  out.points = points.size();
  out.fd_step = e;
  const int n = m.n;

  for (const auto& p : points) {
    if (p.r.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("residual_audit: point dimension does not match model");
    }
    double cont = derivative(m.h, p, -1, e);
    for (int i = 0; i < n; ++i) {
      cont += derivative([&](const SpaceTimePoint& q) { return m.h(q) * m.u(q, i); }, p, i, e);
    }
    raise_to(out.continuity, std::abs(cont));

    const double h = m.h(p);
    for (int j = 0; j < n; ++j) {
      double mom = derivative([&](const SpaceTimePoint& q) { return m.h(q) * m.u(q, j); }, p, -1, e);
      for (int i = 0; i < n; ++i) {
        mom += derivative(
            [&](const SpaceTimePoint& q) { return m.h(q) * m.u(q, i) * m.u(q, j); }, p, i, e);
        if (m.k_h != 0.0) {
          mom -= m.k_h * derivative(
                             [&](const SpaceTimePoint& q) {
                               return m.h(q) * derivative(
                                                   [&](const SpaceTimePoint& r) { return m.u(r, j); },
                                                   q, i, e);
                             },
                             p, i, e);
        }
      }
      mom += m.g * h * derivative(m.h_e, p, j, e);
      raise_to(out.momentum, std::abs(mom));

      if (m.dhb_dr) {
        const double grad = m.dhb_dr(p, j) - derivative(m.h_b, p, j, e);
        raise_to(out.gradient, std::abs(grad));
      }
    }
    raise_to(out.splitting, std::abs(h - m.h_b(p) - m.h_e(p)));
  }
  return out;
}

NdimAuditReport ndim_audit(const SolutionParams& p, std::size_t count, std::uint64_t seed,
                           double fd_step, double tolerance) {
  const auto pts = sample_points(p.n, count, seed);
  NdimAuditReport rep;
  rep.transcribed = residual_audit(model_ndim_transcribed(p), pts, fd_step);
  rep.rederived = residual_audit(model_ndim(p), pts, fd_step);
  rep.transcribed_consistent = rep.transcribed.continuity <= tolerance &&
                               rep.transcribed.momentum <= tolerance &&
                               rep.transcribed.splitting <= tolerance &&
                               rep.transcribed.gradient <= tolerance;
  if (!rep.transcribed_consistent) {
    char buf[640];
    std::snprintf(
        buf, sizeof buf,
        "n=%d: transcribed n-D closed form is inconsistent (momentum residual %.3e, "
        "h - h_B - h_E up to %.3e, gradient-line mismatch %.3e; tolerance %.1e). Its "
        "antiderivative does not integrate the gradient line; the re-derived form "
        "h_E = n*h_E(1D), h_B = h - h_E is used instead (momentum residual %.3e).",
        p.n, rep.transcribed.momentum, rep.transcribed.splitting, rep.transcribed.gradient,
        tolerance, rep.rederived.momentum);
    rep.diagnostic = buf;
  }
  return rep;
}

RateFit fit_rate(std::span<const double> spacing, std::span<const double> error) {
  if (spacing.size() != error.size()) {
    throw std::invalid_argument("fit_rate: length mismatch");
  }
  RateFit fit;
  bool all_zero = !error.empty();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < error.size(); ++i) {
    if (error[i] != 0.0) {
      all_zero = false;
    }
    if (!(error[i] > 0.0) || !(spacing[i] > 0.0) || !std::isfinite(error[i])) {
      continue;
    }
    const double lx = std::log(spacing[i]);
    const double ly = std::log(error[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  fit.exact = all_zero;
  if (m >= 2) {
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom != 0.0) {
      fit.rate = (static_cast<double>(m) * sxy - sx * sy) / denom;
    }
  }
  return fit;
}

ConvergenceReport convergence_study(const Grid1D& base, int levels, const LevelRunner& runner) {
  if (levels < 3) {
    throw std::invalid_argument("convergence_study: need at least 3 levels");
  }
  ConvergenceReport rep;
  std::vector<double> dx;
  std::vector<double> err;
  for (int k = 0; k < levels; ++k) {
    ConvergenceLevel lvl;
    lvl.grid = base.refined(k);
    try {
      lvl.error = runner(lvl.grid);
    } catch (const SolverError& e) {
      lvl.blew_up = true;
      lvl.message = e.what();
      rep.blew_up = true;
      rep.levels.push_back(lvl);
      break;
    }
    dx.push_back(lvl.grid.dx);
    err.push_back(lvl.error.linf);
    rep.levels.push_back(lvl);
  }
  if (!rep.blew_up) {
    rep.fit = fit_rate(dx, err);
  }
  return rep;
}

ConvergenceReport convergence_study(FlowCase c, const Grid1D& base, int levels,
                                    const SchemeConfig& scheme, const SolutionParams& p) {
  RunOptions opts;
  opts.snapshot_times.clear();
  return convergence_study(base, levels, [&](const Grid1D& g) {
    return run(c, g, scheme, p, opts).final_u;
  });
}

ErrorReport make_report(const RunResult& r) {
  ErrorReport rep;
  rep.l2 = r.final_u.l2;
  rep.linf = r.final_u.linf;
  rep.per_snapshot = r.per_snapshot;
  return rep;
}

}  // namespace solitary
