#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldlab/error.hpp"
#include "ldlab/linear_code.hpp"
#include "ldlab/rational.hpp"

namespace ldlab {

enum class JohnsonVariant { kAlphabetFree, kBinary, kQary };

/// Johnson radius. kAlphabetFree: 1 - sqrt(1 - d); kBinary: (1 - sqrt(1 - 2d))/2
/// for d <= 1/2; kQary: (1 - 1/q)(1 - sqrt(1 - q d/(q - 1))) for d <= 1 - 1/q.
/// Templated so callers can re-evaluate at higher precision.
template <typename Real>
Real johnson_radius_as(JohnsonVariant variant, const Real& delta, std::uint32_t q = 2) {
  using std::sqrt;
  if (delta < 0 || delta > 1) throw Error(Errc::kDomainError, "Johnson radius needs 0 <= delta <= 1");
  switch (variant) {
    case JohnsonVariant::kAlphabetFree:
      return Real(1) - sqrt(Real(1) - delta);
    case JohnsonVariant::kBinary:
      if (delta * 2 > 1) throw Error(Errc::kDomainError, "binary Johnson radius needs delta <= 1/2");
      return (Real(1) - sqrt(Real(1) - 2 * delta)) / 2;
    case JohnsonVariant::kQary: {
      if (q < 2) throw Error(Errc::kDomainError, "q-ary Johnson radius needs q >= 2");
      const Real qq(q);
      const Real ratio = qq * delta / (qq - 1);
      if (ratio > 1) throw Error(Errc::kDomainError, "q-ary Johnson radius needs delta <= 1 - 1/q");
      return (Real(1) - Real(1) / qq) * (Real(1) - sqrt(Real(1) - ratio));
    }
  }
  throw Error(Errc::kDomainError, "unknown Johnson variant");
}

double johnson_radius(JohnsonVariant variant, double delta, std::uint32_t q = 2);

/// Inverse of the binary Johnson radius: 2d(1 - d).
double johnson_binary_inverse(double radius);

/// Named bound evaluation. `params` hold the exact textual inputs so that
/// recompute() can re-evaluate from them; `extras` hold derived scalars.
struct BoundReport {
  std::string name;
  std::map<std::string, std::string> params;
  std::map<std::string, double> extras;
  double value = 0;
  bool log_domain = false;  // value is a natural log
  std::string formula;
};

/// Re-evaluates a report from its params. Reports built with a caller
/// supplied list-size function cannot be recomputed and throw DomainError.
BoundReport recompute(const BoundReport& report);

/// b = ceil(eta/(delta - eta)) and r = ceil(log2(delta/(delta - eta))), exactly.
struct InterleavedParams {
  std::int64_t b = 0;
  std::int64_t r = 0;
};
InterleavedParams interleaved_params(const Rational& delta, const Rational& eta);

/// C(b+r, r) * ell^r. Requires 0 < eta < delta <= 1 and ell >= 1.
BoundReport interleaved_bound(const Rational& delta, const Rational& eta, std::uint64_t ell);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct TreeLeafBound {
  std::uint64_t recursion = 0;    // t(b, r)
  std::uint64_t closed_form = 0;  // C(b+r, r) ell^r
  bool holds = false;
};
/// t(b, r) = t(b-1, r) + ell t(b, r-1), t(b, 0) = 1, t(-1, r) = 0.
TreeLeafBound tree_leaf_bound(std::uint64_t b, std::uint64_t r, std::uint64_t ell);

/// Number of r-dimensional subspaces of F_q^k, saturating.
std::uint64_t gaussian_binomial(std::uint64_t k, std::uint64_t r, std::uint64_t q);

/// r-th generalized Hamming weight: min |Supp(V)|/n over r-dim subcodes V,
/// enumerated through canonical reduced row-echelon bases.
Rational ghw(const LinearCode& code, std::size_t r);

/// (q/(q-1)) delta (1 - q^{-r}).
Rational ghw_lower_bound(std::uint32_t q, const Rational& delta, std::size_t r);

struct DeletionGraphReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t greedy_independent = 0;
  std::optional<std::size_t> alpha;  // exact, when vertices <= 40
  bool symmetric = true;             // predicate(c') == predicate(-c') on all tested differences
  /// |V| <= alpha * (max_degree + 1); the +1 counts c' = 0 which keeps each
  /// vertex in its own neighbourhood list. Only checked when alpha is known.
  bool bound_holds = true;
};

inline constexpr std::size_t kExactAlphaLimit = 40;

/// Graph on `list` with an edge when the difference c_i - c_j satisfies
/// `in_subcode`.
DeletionGraphReport deletion_graph_analyze(const Field& field, const std::vector<Word>& list,
                                           const std::function<bool(const Word&)>& in_subcode);
DeletionGraphReport deletion_graph_analyze(const LinearCode& code, std::span<const Symbol> r,
                                           std::int64_t radius_errors,
                                           const std::function<bool(const Word&)>& in_subcode);

/// Exact independence number of a graph given by adjacency bitmasks (<= 64 vertices).
std::size_t independence_number(const std::vector<std::uint64_t>& adjacency);

/// m1 = ln(8 l1/eps)/(2 delta1^2), m2 = ln(8 l2/eps)/(2 eps^2), bound 4 q^{m1 m2}
/// reported as a natural log.
BoundReport tensor_listsize_formula(std::uint32_t q, double delta1, double ell1, double ell2, double eps);

/// Doubling recursion s_{k+1} = a s_k^2 with s_0 = ln(4 ell/eps), a = ln q/(2 delta^2 eps^2).
/// value = ln s_k for m = 2^k; extras carry the closed form ln((a s_0)^m) and
/// the rescaled-eps exponent form. Requires m a power of two and a >= 1.
BoundReport repeated_tensor_bound(std::uint32_t q, double delta, double ell, double eps, std::uint64_t m);

using ListSizeFn = std::function<double(double radius)>;

/// Johnson list-size estimate gamma^{-2} at radius J2(delta) - gamma
/// (infinity when gamma <= 0).
ListSizeFn johnson_list_fn(double delta);

/// The three binary interleaved bounds side by side, plus the constant c'_delta
/// of the Johnson-radius chain. Requires 0 < eta < delta <= 1/2.
std::vector<BoundReport> binary_interleaved_bounds(double delta, double eta, double eps, const ListSizeFn& ell_fn);
/// Same with the Johnson list-size estimate; these reports can be recomputed.
std::vector<BoundReport> binary_interleaved_bounds_johnson(double delta, double eta, double eps);

/// c'_delta = r 2^r prod_{k=1}^{r-1} 4/(delta^2 (1 - 2^{-k})^2) with r = ceil(log2(2/delta^2)).
double c_prime_delta(double delta);

/// ceil(log2(2/delta^2)), the rank threshold used by the binary bounds.
std::int64_t binary_rank_threshold(double delta);

struct SerflingResult {
  double empirical_tail = 0;
  double bound = 0;
  double standard_error = 0;
  std::uint64_t exceed = 0;
  bool holds = false;
};

/// Samples `trials` m-subsets without replacement; tail = fraction whose mean
/// deviates from the population mean by >= gamma. Bound 2 exp(-2 gamma^2 m);
/// the standard error uses p = min(bound, 1).
SerflingResult serfling_check(const std::vector<double>& z, std::size_t m, double gamma, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace ldlab
