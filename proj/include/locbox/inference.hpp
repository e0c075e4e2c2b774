#pragma once

#include <vector>

#include "locbox/geometry.hpp"
#include "locbox/kinds.hpp"

namespace locbox {

// Probabilities are clamped into [kProbEps, 1-kProbEps] before any log is
// taken, so degenerate inputs keep every likelihood finite.
inline constexpr double kProbEps = 1e-6;

double clamp_prob(double p);

// Per-row / per-column probability vectors over the M-grid of a region.
// px/py are in-out probabilities, pl/pr/pt/pb border probabilities; which
// vectors are populated follows kind. Border vectors are independent sigmoid
// outputs and need not sum to one.
struct ProbMaps {
  MapKind kind = MapKind::kInOut;
  int grid = 0;
  std::vector<double> px, py;
  std::vector<double> pl, pr, pt, pb;
};

// Zero-initialized maps of the right shape (entries at kProbEps).
ProbMaps make_probmaps(MapKind kind, int grid);

// Clamp all populated vectors in place and validate shapes.
void clamp_probmaps(ProbMaps& p);
bool probmaps_valid(const ProbMaps& p);

// Log-likelihoods of a grid box under the three models. Summation order is
// fixed (index 1..M, x before y) so repeated evaluations are bit-identical.
double loglik_inout(const ProbMaps& p, const GridBox& g);
double loglik_borders(const ProbMaps& p, const GridBox& g);
double loglik_combined(const ProbMaps& p, const GridBox& g);
double loglik(const ProbMaps& p, const GridBox& g);

// Inference decomposes per axis: every model's log-likelihood is, up to a
// constant, a(l) + b(r) for score vectors a, b built from the maps.
//   in-out:   a(l) = -P(l-1),           b(r) = P(r)       with P = prefix sums
//             of s(i) = log p(i) - log(1-p(i))
//   borders:  a(l) = log pl(l),         b(r) = log pr(r)
//   combined: a(l) = log pl(l) - P(l-1), b(r) = log pr(r) + P(r)
// Both the fast path and the exhaustive oracle maximize a(l)+b(r) over l<=r
// on the same vectors, so results and tie-breaks match bit for bit.
struct AxisScores {
  std::vector<double> a;  // indexed by l-1
  std::vector<double> b;  // indexed by r-1
};

AxisScores axis_scores_x(const ProbMaps& p);
AxisScores axis_scores_y(const ProbMaps& p);

struct AxisInterval {
  int lo = 1;
  int hi = 1;
};

// O(M) selection via prefix/suffix extrema.
AxisInterval best_interval_fast(const AxisScores& s);
// O(M^2) pair enumeration; identical value and lexicographic tie-break
// (smallest lo, then smallest hi). prefer_largest flips the tie preference
// and exists only so the oracle checker can prove it detects divergence.
AxisInterval best_interval_bruteforce(const AxisScores& s, bool prefer_largest = false);

// Maximum-likelihood grid box under p's model, l<=r and t<=b enforced.
GridBox infer(const ProbMaps& p);
// Exhaustive oracle; agrees with infer() including tie-breaks.
GridBox infer_bruteforce(const ProbMaps& p);

}  // namespace locbox
