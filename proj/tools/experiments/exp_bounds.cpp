#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>

#include "context.hpp"
#include "ldlab/bounds.hpp"
#include "ldlab/error.hpp"

namespace ldlab::exp {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

constexpr double kTolerance = 1e-12;

// Outcome of lhs < rhs (or <=) evaluated in double, re-evaluated at 50 digits
// when the double gap is within tolerance.
struct Comparison {
  std::size_t points = 0;
  std::size_t ties = 0;
  std::size_t failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();

  json to_json() const {
    return {{"points", points}, {"ties_resolved_wide", ties}, {"failures", failures}, {"min_gap", min_gap}};
  }
};

// gap(Real) returns rhs - lhs; `strict` asks for a positive gap.
template <typename GapFn>
bool compare(Comparison& c, bool strict, const GapFn& gap) {
  ++c.points;
  const double g = gap(double{});
  c.min_gap = std::min(c.min_gap, g);
  bool ok;
  if (std::abs(g) <= kTolerance) {
    ++c.ties;
    const Wide w = gap(Wide{});
    ok = strict ? w > 0 : w >= 0;
  } else {
    ok = g > 0;
  }
  if (!ok) ++c.failures;
  return ok;
}

// i / d as a Real, exact in the wide type up to its precision.
template <typename Real>
Real ratio(std::int64_t i, std::int64_t d) {
  return Real(i) / Real(d);
}

template <typename Real>
Real johnson(JohnsonVariant v, const Real& delta) {
  return johnson_radius_as<Real>(v, delta);
}

}  // namespace

void run_serfling(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(10000);
  const auto n = static_cast<std::size_t>(ctx.integer("n", 1000));
  Rng rng(ctx.seed_for(0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> z(n);
  for (double& v : z) v = unit(rng);
  std::size_t violations = 0;
  json rows = json::array();
  std::uint64_t index = 1;
  ctx.csv = "gamma,m,empirical_tail,bound,standard_error,holds\n";
  for (double gamma : {0.1, 0.2, 0.3})
    for (std::size_t m : {25, 50, 100}) {
      const SerflingResult res = serfling_check(z, m, gamma, trials, ctx.seed_for(index++));
      if (!res.holds) ++violations;
      rows.push_back({{"gamma", gamma}, {"m", m}, {"empirical_tail", res.empirical_tail}, {"bound", res.bound},
                      {"standard_error", res.standard_error}, {"exceed", res.exceed}, {"holds", res.holds}});
      ctx.csv += std::to_string(gamma) + "," + std::to_string(m) + "," + std::to_string(res.empirical_tail) + "," +
                 std::to_string(res.bound) + "," + std::to_string(res.standard_error) + "," +
                 (res.holds ? "1" : "0") + "\n";
    }
  ctx.aggregate = {{"population", n}, {"trials_per_cell", trials}, {"cells", rows}, {"violations", violations}};
  ctx.verdict("tail_within_bound", violations == 0);
}

void run_bound_analytics(Context& ctx) {
  const auto points = static_cast<std::int64_t>(ctx.integer("points", 1000));
  const std::vector<JohnsonVariant> variants = {JohnsonVariant::kAlphabetFree, JohnsonVariant::kBinary};
  const auto variant_name = [](JohnsonVariant v) { return v == JohnsonVariant::kBinary ? "binary" : "alphabet_free"; };
  // Largest delta each variant is defined at, as a fraction of 1.
  const auto top = [](JohnsonVariant v) { return v == JohnsonVariant::kBinary ? std::int64_t{2} : std::int64_t{1}; };

  json range = json::object(), convexity = json::object(), power = json::object();
  bool range_ok = true, convexity_ok = true, power_ok = true;
  for (JohnsonVariant v : variants) {
    const std::int64_t den = points * top(v);
    // delta/2 < J(delta) <= delta on delta = i / den, i = 1..points.
    Comparison lower, upper;
    for (std::int64_t i = 1; i <= points; ++i) {
      compare(lower, true, [&](auto real) {
        using Real = decltype(real);
        const Real d = ratio<Real>(i, den);
        return johnson(v, d) - d / 2;
      });
      compare(upper, false, [&](auto real) {
        using Real = decltype(real);
        const Real d = ratio<Real>(i, den);
        return d - johnson(v, d);
      });
    }
    range[variant_name(v)] = {{"lower", lower.to_json()}, {"upper", upper.to_json()}};
    range_ok = range_ok && lower.failures == 0 && upper.failures == 0;

    // J(d1 d2) < min(d1 J(d2), d2 J(d1)) on a 40 x 25 grid strictly inside the domain.
    Comparison conv;
    const std::int64_t n1 = 40, n2 = points / n1;
    for (std::int64_t i = 1; i <= n1; ++i)
      for (std::int64_t j = 1; j <= n2; ++j)
        compare(conv, true, [&](auto real) {
          using Real = decltype(real);
          const Real d1 = ratio<Real>(i, (n1 + 1) * top(v));
          const Real d2 = ratio<Real>(j, (n2 + 1) * top(v));
          const Real lhs = johnson(v, Real(d1 * d2));
          const Real a = d1 * johnson(v, d2);
          const Real b = d2 * johnson(v, d1);
          return (a < b ? a : b) - lhs;
        });
    convexity[variant_name(v)] = conv.to_json();
    convexity_ok = convexity_ok && conv.failures == 0;

    // d^{m-1} J(d) > J(d^m) for m = 2..5 on 250 points each.
    Comparison pw;
    const std::int64_t per_m = points / 4;
    for (std::int64_t m = 2; m <= 5; ++m)
      for (std::int64_t i = 1; i <= per_m; ++i)
        compare(pw, true, [&](auto real) {
          using Real = decltype(real);
          using std::pow;
          const Real d = ratio<Real>(i, (per_m + 1) * top(v));
          return Real(pow(d, m - 1)) * johnson(v, d) - johnson(v, Real(pow(d, m)));
        });
    power[variant_name(v)] = pw.to_json();
    power_ok = power_ok && pw.failures == 0;
  }

  // Doubling recursion against the closed form (a s0)^m in log space.
  Comparison rec;
  std::size_t domain_skips = 0;
  const std::vector<std::uint32_t> qs = {2, 3, 4, 5, 7};
  const std::vector<std::uint64_t> ms = {1, 2, 4, 8, 16};
  const std::int64_t per_cell = std::max<std::int64_t>(1, points / static_cast<std::int64_t>(qs.size() * ms.size()));
  for (std::uint32_t q : qs)
    for (std::uint64_t m : ms)
      for (std::int64_t i = 1; i <= per_cell; ++i) {
        const double delta = static_cast<double>(i) / static_cast<double>(per_cell + 1);
        const double eps = 0.01 + 0.24 * static_cast<double>((i * 7) % per_cell) / static_cast<double>(per_cell);
        const double ell = 1 + static_cast<double>(i % 10);
        BoundReport rep;
        try {
          rep = repeated_tensor_bound(q, delta, ell, eps, m);
        } catch (const Error&) {
          ++domain_skips;
          continue;
        }
        compare(rec, false, [&](auto real) {
          using Real = decltype(real);
          using std::log;
          const Real d(delta), e(eps), l(ell);
          const Real a = log(Real(q)) / (2 * d * d * e * e);
          const Real s0 = log(4 * l / e);
          Real log_s = log(s0);
          for (std::uint64_t step = 1; step < m; step *= 2) log_s = log(a) + 2 * log_s;
          if constexpr (std::is_same_v<Real, double>) log_s = rep.value;
          const Real closed = Real(static_cast<double>(m)) * (log(a) + log(s0));
          return closed - log_s;
        });
      }

  ctx.aggregate = {{"tolerance", kTolerance},
                   {"johnson_range", range},
                   {"convexity", convexity},
                   {"power_comparison", power},
                   {"recursion_vs_closed_form", rec.to_json()},
                   {"recursion_domain_skips", domain_skips}};
  ctx.verdict("johnson_range", range_ok);
  ctx.verdict("convexity_comparison", convexity_ok);
  ctx.verdict("power_comparison", power_ok);
  ctx.verdict("recursion_at_most_closed_form", rec.failures == 0 && rec.points > 0);
}

}  // namespace ldlab::exp
