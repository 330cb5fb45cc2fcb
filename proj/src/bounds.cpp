#include "ldlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

#include "ldlab/rng.hpp"

namespace ldlab {

namespace {

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error(Errc::kDomainError, "bound report lacks parameter " + key);
  double v = 0;
  const auto res = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
  if (res.ec != std::errc{}) throw Error(Errc::kParseError, "bad numeric parameter " + key);
  return v;
}

std::uint64_t parse_u64(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error(Errc::kDomainError, "bound report lacks parameter " + key);
  return std::stoull(it->second);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw Error(Errc::kDomainError, "integer overflow in leaf-bound recursion");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw Error(Errc::kDomainError, "integer overflow in leaf-bound recursion");
  return a + b;
}

constexpr const char* kJohnsonFn = "johnson";
constexpr const char* kCustomFn = "custom";

std::vector<BoundReport> binary_bounds_impl(double delta, double eta, double eps, const ListSizeFn& ell_fn,
                                            const char* fn_tag);

}  // namespace

double johnson_radius(JohnsonVariant variant, double delta, std::uint32_t q) {
  return johnson_radius_as<double>(variant, delta, q);
}

double johnson_binary_inverse(double radius) { return 2 * radius * (1 - radius); }

InterleavedParams interleaved_params(const Rational& delta, const Rational& eta) {
  if (!(eta < delta)) throw Error(Errc::kDomainError, "interleaved parameters need eta < delta");
  if (eta < Rational(0)) throw Error(Errc::kDomainError, "interleaved parameters need eta >= 0");
  const Rational gap = delta - eta;
  InterleavedParams p;
  p.b = (eta / gap).ceil();
  const Rational ratio = delta / gap;
  std::int64_t pow2 = 1;
  while (Rational(pow2) < ratio) {
    pow2 *= 2;
    ++p.r;
  }
  return p;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > std::numeric_limits<std::uint64_t>::max()) throw Error(Errc::kDomainError, "binomial overflow");
  }
  return static_cast<std::uint64_t>(out);
}

BoundReport interleaved_bound(const Rational& delta, const Rational& eta, std::uint64_t ell) {
  if (!(Rational(0) < eta) || !(eta < delta) || Rational(1) < delta)
    throw Error(Errc::kDomainError, "interleaved bound needs 0 < eta < delta <= 1");
  if (ell < 1) throw Error(Errc::kDomainError, "list size must be at least 1");
  const InterleavedParams p = interleaved_params(delta, eta);
  BoundReport rep;
  rep.name = "interleaved_bound";
  rep.params = {{"delta", delta.str()}, {"eta", eta.str()}, {"ell", std::to_string(ell)}};
  rep.extras = {{"b", static_cast<double>(p.b)}, {"r", static_cast<double>(p.r)}};
  rep.value = static_cast<double>(binomial(static_cast<std::uint64_t>(p.b + p.r), static_cast<std::uint64_t>(p.r))) *
              std::pow(static_cast<double>(ell), static_cast<double>(p.r));
  rep.formula = "C(b+r, r) * ell^r, b = ceil(eta/(delta-eta)), r = ceil(log2(delta/(delta-eta)))";
  return rep;
}

TreeLeafBound tree_leaf_bound(std::uint64_t b, std::uint64_t r, std::uint64_t ell) {
  // t[bb][rr] computed row by row; t(-1, rr) = 0 and t(bb, 0) = 1.
  std::vector<std::vector<std::uint64_t>> t(b + 1, std::vector<std::uint64_t>(r + 1, 0));
  for (std::uint64_t bb = 0; bb <= b; ++bb) {
    t[bb][0] = 1;
    for (std::uint64_t rr = 1; rr <= r; ++rr) {
      const std::uint64_t left = bb == 0 ? 0 : t[bb - 1][rr];
      t[bb][rr] = checked_add(left, checked_mul(ell, t[bb][rr - 1]));
    }
  }
  TreeLeafBound out;
  out.recursion = t[b][r];
  std::uint64_t closed = binomial(b + r, r);
  for (std::uint64_t i = 0; i < r; ++i) closed = checked_mul(closed, ell);
  out.closed_form = closed;
  out.holds = out.recursion <= out.closed_form;
  return out;
}

std::uint64_t gaussian_binomial(std::uint64_t k, std::uint64_t r, std::uint64_t q) {
  if (r > k) return 0;
  // Pascal-type recurrence [k, r] = [k-1, r-1] + q^r [k-1, r], saturating.
  constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(r + 1, 0);
  row[0] = 1;
  for (std::uint64_t kk = 1; kk <= k; ++kk)
    for (std::uint64_t rr = std::min(kk, r); rr >= 1; --rr) {
      const unsigned __int128 v =
          static_cast<unsigned __int128>(row[rr - 1]) + static_cast<unsigned __int128>(saturating_pow(q, rr)) * row[rr];
      row[rr] = v > kSat ? kSat : static_cast<std::uint64_t>(v);
    }
  return row[r];
}

Rational ghw(const LinearCode& code, std::size_t r) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  if (r == 0 || r > k) throw Error(Errc::kDomainError, "ghw needs 1 <= r <= k");
  const Field& f = code.field();
  const std::uint32_t q = f.order();
  const std::uint64_t count = gaussian_binomial(k, r, q);
  if (count > enumeration_cap())
    throw Error(Errc::kEnumerationTooLarge, "too many " + std::to_string(r) + "-dimensional subcodes");

  std::size_t best = n + 1;
  std::vector<std::size_t> pivots(r);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  while (true) {
    // Free cells: row i, column j > pivots[i], j not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = pivots[i] + 1; j < k; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cells.emplace_back(i, j);
    Matrix basis(r, k);
    for (std::size_t i = 0; i < r; ++i) basis(i, pivots[i]) = 1;
    std::vector<Symbol> digits(free_cells.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < free_cells.size(); ++c) basis(free_cells[c].first, free_cells[c].second) = digits[c];
      const Matrix span = multiply(f, basis, code.generator());
      std::size_t support = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < r; ++i)
          if (span(i, j) != 0) {
            ++support;
            break;
          }
      best = std::min(best, support);
      std::size_t pos = digits.size();
      while (pos-- > 0) {
        digits[pos] = static_cast<Symbol>((digits[pos] + 1u) % q);
        if (digits[pos] != 0) break;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
    // Next r-combination of {0..k-1}.
    std::size_t i = r;
    while (i-- > 0) {
      if (pivots[i] < k - r + i) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
}

Rational ghw_lower_bound(std::uint32_t q, const Rational& delta, std::size_t r) {
  if (r < 1) throw Error(Errc::kDomainError, "ghw lower bound needs r >= 1");
  const std::uint64_t qr = saturating_pow(q, r);
  if (qr > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4))
    throw Error(Errc::kDomainError, "q^r too large for exact evaluation");
  const auto qr_i = static_cast<std::int64_t>(qr);
  return Rational(q, q - 1) * delta * Rational(qr_i - 1, qr_i);
}

std::size_t independence_number(const std::vector<std::uint64_t>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > 64) throw Error(Errc::kDomainError, "exact independence number supports at most 64 vertices");
  std::size_t best = 0;
  const std::function<void(std::uint64_t, std::size_t)> search = [&](std::uint64_t cand, std::size_t chosen) {
    if (cand == 0) {
      best = std::max(best, chosen);
      return;
    }
    if (chosen + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    // Branch on the candidate with the most neighbours inside cand.
    std::size_t v = 0;
    int deg = -1;
    for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      const int d = std::popcount(adjacency[u] & cand);
      if (d > deg) {
        deg = d;
        v = u;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (deg == 0) {
      search(cand & ~bit, chosen + 1);
      return;
    }
    search(cand & ~bit & ~adjacency[v], chosen + 1);
    search(cand & ~bit, chosen);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  search(all, 0);
  return best;
}

DeletionGraphReport deletion_graph_analyze(const Field& field, const std::vector<Word>& list,
                                           const std::function<bool(const Word&)>& in_subcode) {
  DeletionGraphReport rep;
  const std::size_t n = list.size();
  rep.vertices = n;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Word diff(list[i].size());
      Word neg(list[i].size());
      for (std::size_t t = 0; t < diff.size(); ++t) {
        diff[t] = field.sub(list[i][t], list[j][t]);
        neg[t] = field.neg(diff[t]);
      }
      const bool e = in_subcode(diff);
      if (e != in_subcode(neg)) rep.symmetric = false;
      if (e) {
        adj[i][j] = adj[j][i] = true;
        ++degree[i];
        ++degree[j];
        ++rep.edges;
      }
    }
  for (auto d : degree) rep.max_degree = std::max(rep.max_degree, d);

  // Greedy: take a minimum-degree remaining vertex, drop its neighbours.
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t pick = n;
    std::size_t pick_deg = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      std::size_t d = 0;
      for (std::size_t j = 0; j < n; ++j) d += (alive[j] && adj[i][j]) ? 1 : 0;
      if (d < pick_deg) {
        pick_deg = d;
        pick = i;
      }
    }
    ++rep.greedy_independent;
    alive[pick] = false;
    --remaining;
    for (std::size_t j = 0; j < n; ++j)
      if (alive[j] && adj[pick][j]) {
        alive[j] = false;
        --remaining;
      }
  }

  if (n <= kExactAlphaLimit) {
    std::vector<std::uint64_t> masks(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (adj[i][j]) masks[i] |= std::uint64_t{1} << j;
    rep.alpha = independence_number(masks);
    rep.bound_holds = rep.vertices <= *rep.alpha * (rep.max_degree + 1);
  }
  return rep;
}

DeletionGraphReport deletion_graph_analyze(const LinearCode& code, std::span<const Symbol> r,
                                           std::int64_t radius_errors,
                                           const std::function<bool(const Word&)>& in_subcode) {
  std::vector<Word> list;
  for (auto& e : list_decode_brute(code, r, radius_errors)) list.push_back(std::move(e.codeword));
  return deletion_graph_analyze(code.field(), list, in_subcode);
}

BoundReport tensor_listsize_formula(std::uint32_t q, double delta1, double ell1, double ell2, double eps) {
  if (q < 2 || !(delta1 > 0) || !(ell1 > 0) || !(ell2 > 0) || !(eps > 0) || !(eps < 1))
    throw Error(Errc::kDomainError, "tensor list-size formula needs positive parameters and eps < 1");
  const double m1 = std::log(8 * ell1 / eps) / (2 * delta1 * delta1);
  const double m2 = std::log(8 * ell2 / eps) / (2 * eps * eps);
  BoundReport rep;
  rep.name = "tensor_listsize_formula";
  rep.params = {{"q", std::to_string(q)}, {"delta1", fmt(delta1)}, {"ell1", fmt(ell1)}, {"ell2", fmt(ell2)},
                {"eps", fmt(eps)}};
  rep.extras = {{"m1", m1},
                {"m2", m2},
                {"m1_ceil", std::ceil(m1)},
                {"m2_ceil", std::ceil(m2)},
                {"log_bound_ceil", std::log(4.0) + std::ceil(m1) * std::ceil(m2) * std::log(static_cast<double>(q))},
                {"radius_shift", 3 * eps}};
  rep.value = std::log(4.0) + m1 * m2 * std::log(static_cast<double>(q));
  rep.log_domain = true;
  rep.formula = "ln(4 q^{m1 m2}), m1 = ln(8 l1/eps)/(2 delta1^2), m2 = ln(8 l2/eps)/(2 eps^2); radius eta* - 3 eps";
  return rep;
}

BoundReport repeated_tensor_bound(std::uint32_t q, double delta, double ell, double eps, std::uint64_t m) {
  if (m == 0 || (m & (m - 1)) != 0) throw Error(Errc::kMNotPowerOfTwo, "m must be a power of two");
  if (q < 2 || !(delta > 0) || !(delta < 1) || !(ell > 0) || !(eps > 0))
    throw Error(Errc::kDomainError, "repeated tensor bound needs q >= 2, 0 < delta < 1, ell > 0, eps > 0");
  const double a = std::log(static_cast<double>(q)) / (2 * delta * delta * eps * eps);
  const double s0 = std::log(4 * ell / eps);
  if (!(a >= 1) || !(s0 > 0)) throw Error(Errc::kDomainError, "recursion needs a >= 1 and s0 > 0");
  const auto k = static_cast<std::uint64_t>(std::countr_zero(m));
  double log_s = std::log(s0);
  for (std::uint64_t i = 0; i < k; ++i) log_s = std::log(a) + 2 * log_s;
  const double md = static_cast<double>(m);
  const double log_closed = md * (std::log(a) + std::log(s0));
  const double d2 = delta * delta;
  const double x = 9 * std::log(static_cast<double>(q)) * std::log(12 * ell / (eps * (1 - d2))) /
                   (2 * d2 * (1 - d2) * (1 - d2) * eps * eps);
  const double eps_r = eps * (1 - d2) / 3;  // the eps that the rescaled form absorbs
  const double a_r = std::log(static_cast<double>(q)) / (2 * d2 * eps_r * eps_r);
  const double s0_r = std::log(4 * ell / eps_r);

  BoundReport rep;
  rep.name = "repeated_tensor_bound";
  rep.params = {{"q", std::to_string(q)}, {"delta", fmt(delta)}, {"ell", fmt(ell)}, {"eps", fmt(eps)},
                {"m", std::to_string(m)}};
  rep.extras = {{"a", a},
                {"s0", s0},
                {"doublings", static_cast<double>(k)},
                {"log_closed_form", log_closed},
                {"log_rescaled_exponent", md * std::log(x)},
                {"log_rescaled_via_recursion", md * (std::log(a_r) + std::log(s0_r))},
                {"radius_offset_rescaled", 3 * eps / (1 - d2)}};
  rep.value = log_s;
  rep.log_domain = true;
  rep.formula = "ln s_k with s_{k+1} = a s_k^2, s_0 = ln(4 ell/eps), a = ln q/(2 delta^2 eps^2), m = 2^k";
  return rep;
}

ListSizeFn johnson_list_fn(double delta) {
  const double j = johnson_radius(JohnsonVariant::kBinary, delta);
  return [j](double radius) {
    const double gamma = j - radius;
    if (gamma <= 0) return std::numeric_limits<double>::infinity();
    return 1 / (gamma * gamma);
  };
}

std::int64_t binary_rank_threshold(double delta) {
  if (!(delta > 0) || delta > 1) throw Error(Errc::kDomainError, "rank threshold needs 0 < delta <= 1");
  // least r with 2^r >= 2/delta^2
  const double target = 2 / (delta * delta);
  std::int64_t r = 0;
  double p = 1;
  while (p < target) {
    p *= 2;
    ++r;
  }
  return r;
}

double c_prime_delta(double delta) {
  const std::int64_t r = binary_rank_threshold(delta);
  double out = static_cast<double>(r) * std::ldexp(1.0, static_cast<int>(r));
  for (std::int64_t k = 1; k < r; ++k) {
    const double t = 1 - std::ldexp(1.0, static_cast<int>(-k));
    out *= 4 / (delta * delta * t * t);
  }
  return out;
}

namespace {

std::vector<BoundReport> binary_bounds_impl(double delta, double eta, double eps, const ListSizeFn& ell_fn,
                                            const char* fn_tag) {
  if (!(eta > 0) || !(eta < delta) || delta > 0.5)
    throw Error(Errc::kDomainError, "binary interleaved bounds need 0 < eta < delta <= 1/2");
  const std::int64_t r = binary_rank_threshold(delta);
  std::int64_t r61 = 0;  // ceil(log2(2/delta)) for the erasure-tree form
  for (double p = 1; p < 2 / delta; p *= 2) ++r61;
  const std::map<std::string, std::string> params = {
      {"delta", fmt(delta)}, {"eta", fmt(eta)}, {"eps", fmt(eps)}, {"ell_fn", fn_tag}};
  const auto shifted_product = [&](std::int64_t terms) {
    double prod = 1;
    for (std::int64_t k = 0; k < terms; ++k)
      prod *= ell_fn(eta - delta * (1 - std::ldexp(1.0, static_cast<int>(-k))) / 2);
    return prod;
  };
  const double d4 = std::pow(delta, 4);
  std::vector<BoundReport> out;

  BoundReport b23;
  b23.name = "binary_interleaved_ghw";
  b23.params = params;
  b23.extras = {{"r", static_cast<double>(r)}, {"ell_eta", ell_fn(eta)}};
  b23.value = 4 / d4 *
              std::pow(2 * ell_fn(eta) / (delta * delta * (delta - eta)), static_cast<double>(r));
  b23.formula = "(4/delta^4) (2 l(eta)/(delta^2 (delta - eta)))^r, r = ceil(log2(2/delta^2))";
  out.push_back(b23);

  BoundReport b61;
  b61.name = "binary_interleaved_erasure_tree";
  b61.params = params;
  b61.extras = {{"r", static_cast<double>(r61)}, {"product", shifted_product(r61)}};
  b61.value = std::ldexp(1.0, static_cast<int>(2 * r61 * r61)) / (d4 * std::pow(delta - eta, static_cast<double>(r61))) *
              shifted_product(r61);
  b61.formula = "2^{2r^2}/(delta^4 (delta - eta)^r) prod_{k<r} l(eta - delta(1 - 2^-k)/2), r = ceil(log2(2/delta))";
  out.push_back(b61);

  BoundReport b62;
  b62.name = "binary_interleaved_rank_r";
  b62.params = params;
  b62.extras = {{"r", static_cast<double>(r)}, {"product", shifted_product(r)}};
  b62.value = static_cast<double>(r) * std::ldexp(1.0, static_cast<int>(r)) * shifted_product(r);
  b62.formula = "r 2^r prod_{k<r} l(eta - delta(1 - 2^-k)/2), r = ceil(log2(2/delta^2))";
  out.push_back(b62);

  // Johnson chain at eta = J2(delta) - eps: gamma_k = delta(1 - 2^-k)/2 + eps.
  BoundReport chain;
  chain.name = "binary_interleaved_johnson_chain";
  chain.params = params;
  double prod = 1;
  for (std::int64_t k = 0; k < r; ++k) {
    const double gamma = delta * (1 - std::ldexp(1.0, static_cast<int>(-k))) / 2 + eps;
    prod *= 1 / (gamma * gamma);
  }
  const double cp = c_prime_delta(delta);
  chain.extras = {{"r", static_cast<double>(r)}, {"c_prime", cp}, {"c_prime_over_eps2", cp / (eps * eps)}};
  chain.value = static_cast<double>(r) * std::ldexp(1.0, static_cast<int>(r)) * prod;
  chain.formula = "r 2^r prod_{k<r} gamma_k^-2 <= c'_delta eps^-2, c'_delta = r 2^r prod_{1<=k<r} 4/(delta^2 (1-2^-k)^2)";
  out.push_back(chain);
  return out;
}

}  // namespace

std::vector<BoundReport> binary_interleaved_bounds(double delta, double eta, double eps, const ListSizeFn& ell_fn) {
  return binary_bounds_impl(delta, eta, eps, ell_fn, kCustomFn);
}

std::vector<BoundReport> binary_interleaved_bounds_johnson(double delta, double eta, double eps) {
  return binary_bounds_impl(delta, eta, eps, johnson_list_fn(delta), kJohnsonFn);
}

BoundReport recompute(const BoundReport& report) {
  const auto& p = report.params;
  if (report.name == "interleaved_bound")
    return interleaved_bound(Rational::parse(p.at("delta")), Rational::parse(p.at("eta")), parse_u64(p, "ell"));
  if (report.name == "tensor_listsize_formula")
    return tensor_listsize_formula(static_cast<std::uint32_t>(parse_u64(p, "q")), parse_double(p, "delta1"),
                                   parse_double(p, "ell1"), parse_double(p, "ell2"), parse_double(p, "eps"));
  if (report.name == "repeated_tensor_bound")
    return repeated_tensor_bound(static_cast<std::uint32_t>(parse_u64(p, "q")), parse_double(p, "delta"),
                                 parse_double(p, "ell"), parse_double(p, "eps"), parse_u64(p, "m"));
  if (report.name.rfind("binary_interleaved_", 0) == 0) {
    if (p.count("ell_fn") == 0 || p.at("ell_fn") != kJohnsonFn)
      throw Error(Errc::kDomainError, "report used a caller-supplied list-size function");
    for (auto& r : binary_interleaved_bounds_johnson(parse_double(p, "delta"), parse_double(p, "eta"),
                                                     parse_double(p, "eps")))
      if (r.name == report.name) return r;
  }
  throw Error(Errc::kDomainError, "no recomputation rule for " + report.name);
}

SerflingResult serfling_check(const std::vector<double>& z, std::size_t m, double gamma, std::uint64_t trials,
                              std::uint64_t seed) {
  const std::size_t n = z.size();
  if (m > n) throw Error(Errc::kMExceedsN, "sample size exceeds population");
  if (m == 0 || trials == 0) throw Error(Errc::kDomainError, "serfling check needs m >= 1 and trials >= 1");
  const double mean = std::accumulate(z.begin(), z.end(), 0.0) / static_cast<double>(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> swaps(m);
  SerflingResult res;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    double sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + uniform_below(rng, n - i);
      swaps[i] = j;
      std::swap(perm[i], perm[j]);
      sum += z[perm[i]];
    }
    if (std::abs(sum / static_cast<double>(m) - mean) >= gamma) ++res.exceed;
    for (std::size_t i = m; i-- > 0;) std::swap(perm[i], perm[swaps[i]]);  // restore identity
  }
  res.empirical_tail = static_cast<double>(res.exceed) / static_cast<double>(trials);
  res.bound = 2 * std::exp(-2 * gamma * gamma * static_cast<double>(m));
  const double p = std::min(res.bound, 1.0);
  res.standard_error = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  res.holds = res.empirical_tail <= res.bound + 3 * res.standard_error;
  return res;
}

}  // namespace ldlab
