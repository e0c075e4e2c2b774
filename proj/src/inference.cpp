#include "locbox/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace locbox {

double clamp_prob(double p) { return std::clamp(p, kProbEps, 1.0 - kProbEps); }

ProbMaps make_probmaps(MapKind kind, int grid) {
  ProbMaps p;
  p.kind = kind;
  p.grid = grid;
  if (has_inout(kind)) {
    p.px.assign(grid, kProbEps);
    p.py.assign(grid, kProbEps);
  }
  if (has_borders(kind)) {
    p.pl.assign(grid, kProbEps);
    p.pr.assign(grid, kProbEps);
    p.pt.assign(grid, kProbEps);
    p.pb.assign(grid, kProbEps);
  }
  return p;
}

void clamp_probmaps(ProbMaps& p) {
  auto clamp_vec = [](std::vector<double>& v) {
    for (double& x : v) x = clamp_prob(x);
  };
  clamp_vec(p.px);
  clamp_vec(p.py);
  clamp_vec(p.pl);
  clamp_vec(p.pr);
  clamp_vec(p.pt);
  clamp_vec(p.pb);
}

bool probmaps_valid(const ProbMaps& p) {
  if (p.grid < 1) return false;
  auto ok = [&](const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != p.grid) return false;
    for (double x : v)
      if (!(x >= kProbEps && x <= 1.0 - kProbEps)) return false;
    return true;
  };
  if (has_inout(p.kind) && (!ok(p.px) || !ok(p.py))) return false;
  if (has_borders(p.kind) && (!ok(p.pl) || !ok(p.pr) || !ok(p.pt) || !ok(p.pb))) return false;
  return true;
}

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double inout_axis_loglik(const std::vector<double>& p, int lo, int hi) {
  double acc = 0.0;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    double v = p[i - 1];
    acc += (i >= lo && i <= hi) ? std::log(v) : std::log(1.0 - v);
  }
  return acc;
}

}  // namespace

double loglik_inout(const ProbMaps& p, const GridBox& g) {
  require(has_inout(p.kind), "loglik_inout: maps lack in-out vectors");
  require(gridbox_valid(g, p.grid), "loglik_inout: invalid grid box");
  return inout_axis_loglik(p.px, g.l, g.r) + inout_axis_loglik(p.py, g.t, g.b);
}

double loglik_borders(const ProbMaps& p, const GridBox& g) {
  require(has_borders(p.kind), "loglik_borders: maps lack border vectors");
  require(gridbox_valid(g, p.grid), "loglik_borders: invalid grid box");
  return std::log(p.pl[g.l - 1]) + std::log(p.pt[g.t - 1]) + std::log(p.pr[g.r - 1]) +
         std::log(p.pb[g.b - 1]);
}

double loglik_combined(const ProbMaps& p, const GridBox& g) {
  return loglik_borders(p, g) + loglik_inout(p, g);
}

double loglik(const ProbMaps& p, const GridBox& g) {
  switch (p.kind) {
    case MapKind::kInOut:
      return loglik_inout(p, g);
    case MapKind::kBorders:
      return loglik_borders(p, g);
    case MapKind::kCombined:
      return loglik_combined(p, g);
  }
  throw std::logic_error("loglik: bad kind");
}

namespace {

// Prefix sums P[0..M] of the per-cell in-out score, left to right.
std::vector<double> inout_prefix(const std::vector<double>& p) {
  std::vector<double> prefix(p.size() + 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    prefix[i + 1] = prefix[i] + (std::log(p[i]) - std::log(1.0 - p[i]));
  return prefix;
}

AxisScores build_axis(const ProbMaps& p, const std::vector<double>& inout,
                      const std::vector<double>& lo_border, const std::vector<double>& hi_border) {
  int m = p.grid;
  AxisScores s;
  s.a.assign(m, 0.0);
  s.b.assign(m, 0.0);
  if (p.kind == MapKind::kInOut) {
    std::vector<double> prefix = inout_prefix(inout);
    for (int i = 0; i < m; ++i) {
      s.a[i] = -prefix[i];
      s.b[i] = prefix[i + 1];
    }
  } else if (p.kind == MapKind::kBorders) {
    for (int i = 0; i < m; ++i) {
      s.a[i] = std::log(lo_border[i]);
      s.b[i] = std::log(hi_border[i]);
    }
  } else {
    std::vector<double> prefix = inout_prefix(inout);
    for (int i = 0; i < m; ++i) {
      s.a[i] = std::log(lo_border[i]) - prefix[i];
      s.b[i] = std::log(hi_border[i]) + prefix[i + 1];
    }
  }
  return s;
}

}  // namespace

AxisScores axis_scores_x(const ProbMaps& p) { return build_axis(p, p.px, p.pl, p.pr); }
AxisScores axis_scores_y(const ProbMaps& p) { return build_axis(p, p.py, p.pt, p.pb); }

AxisInterval best_interval_fast(const AxisScores& s) {
  int m = static_cast<int>(s.a.size());
  double neg_inf = -std::numeric_limits<double>::infinity();

  // Pass 1: the maximum of a(l)+b(r) over l<=r. Addition with a fixed operand
  // is monotone, so running prefix maxima of a() lose nothing.
  double best = neg_inf;
  double prefix_a = neg_inf;
  for (int r = 0; r < m; ++r) {
    prefix_a = std::max(prefix_a, s.a[r]);
    best = std::max(best, prefix_a + s.b[r]);
  }

  // Pass 2: smallest l achieving the maximum, via suffix maxima of b().
  std::vector<double> suffix_b(m);
  double run = neg_inf;
  for (int r = m - 1; r >= 0; --r) {
    run = std::max(run, s.b[r]);
    suffix_b[r] = run;
  }
  int lo = 0;
  while (lo < m && s.a[lo] + suffix_b[lo] != best) ++lo;

  // Pass 3: smallest r for that l.
  int hi = lo;
  while (hi < m && s.a[lo] + s.b[hi] != best) ++hi;

  return AxisInterval{lo + 1, hi + 1};
}

AxisInterval best_interval_bruteforce(const AxisScores& s, bool prefer_largest) {
  int m = static_cast<int>(s.a.size());
  double best = -std::numeric_limits<double>::infinity();
  AxisInterval out;
  for (int l = 0; l < m; ++l) {
    for (int r = l; r < m; ++r) {
      double v = s.a[l] + s.b[r];
      bool better = prefer_largest ? v >= best : v > best;
      if (better || (l == 0 && r == 0)) {
        best = v;
        out = AxisInterval{l + 1, r + 1};
      }
    }
  }
  return out;
}

GridBox infer(const ProbMaps& p) {
  require(probmaps_valid(p), "infer: invalid probability maps");
  AxisInterval x = best_interval_fast(axis_scores_x(p));
  AxisInterval y = best_interval_fast(axis_scores_y(p));
  return GridBox{x.lo, y.lo, x.hi, y.hi};
}

GridBox infer_bruteforce(const ProbMaps& p) {
  require(probmaps_valid(p), "infer_bruteforce: invalid probability maps");
  AxisInterval x = best_interval_bruteforce(axis_scores_x(p));
  AxisInterval y = best_interval_bruteforce(axis_scores_y(p));
  return GridBox{x.lo, y.lo, x.hi, y.hi};
}

}  // namespace locbox
