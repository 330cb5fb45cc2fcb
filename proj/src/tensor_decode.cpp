#include "ldlab/tensor_decode.hpp"

#include <algorithm>
#include <cmath>

#include "ldlab/error.hpp"

namespace ldlab {

namespace {

std::int64_t as_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

std::size_t capped_ceil(double x, std::size_t cap, bool& capped) {
  const double c = std::ceil(x);
  if (!(c < static_cast<double>(cap))) {
    capped = true;
    return cap;
  }
  capped = false;
  return c < 1 ? 1 : static_cast<std::size_t>(c);
}

struct Context {
  const LinearCode& c1;
  const LinearCode& c2;
  const Grid& received;
  const TensorDecodeOptions& opt;
  std::size_t n1;
  std::size_t n2;
  std::vector<DecodeList> row_lists;     // n2 lists over C1
  std::vector<DecodeList> column_lists;  // n1 lists over C2
  std::int64_t target_errors;
};

// Runs phases 1-4 for one advice grid A (|S| x |T|).
PhaseState run_branch(const Context& ctx, const std::vector<std::size_t>& S, const std::vector<std::size_t>& T,
                      const Grid& A) {
  const std::size_t n1 = ctx.n1;
  const std::size_t n2 = ctx.n2;
  const Rational& eps = ctx.opt.eps;
  PhaseState st;
  st.S = S;
  st.T = T;
  st.A = A;

  // Phase 1: B[s,*] is the first row-list codeword agreeing with A on T.
  st.B = Grid(S.size(), n1, kErased);
  st.s_success.assign(S.size(), false);
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (const ListEntry& e : ctx.row_lists[S[i]]) {
      bool agrees = true;
      for (std::size_t j = 0; j < T.size() && agrees; ++j) agrees = e.codeword[T[j]] == A(i, j);
      if (agrees) {
        st.B.set_row(i, e.codeword);
        st.s_success[i] = true;
        break;
      }
    }
  }

  // Phase 2: D[*,t] is the first column-list codeword with fewer than eps|S|
  // disagreements against B on S_success.
  const Rational col_limit = eps * Rational(as_i64(S.size()));
  st.D = Grid(n2, n1, kErased);
  st.t_success.assign(n1, false);
  for (std::size_t t = 0; t < n1; ++t) {
    for (const ListEntry& e : ctx.column_lists[t]) {
      std::size_t dis = 0;
      for (std::size_t i = 0; i < S.size(); ++i)
        if (st.s_success[i] && e.codeword[S[i]] != st.B(i, t)) ++dis;
      if (Rational(as_i64(dis)) < col_limit) {
        st.D.set_column(t, e.codeword);
        st.t_success[t] = true;
        break;
      }
    }
  }

  // Phase 3: E[s,*] is the first row-list codeword with fewer than eps n1
  // disagreements against D on T_success.
  const Rational row_limit = eps * Rational(as_i64(n1));
  st.E = Grid(n2, n1, kErased);
  st.u_success.assign(n2, false);
  for (std::size_t s = 0; s < n2; ++s) {
    for (const ListEntry& e : ctx.row_lists[s]) {
      std::size_t dis = 0;
      for (std::size_t t = 0; t < n1; ++t)
        if (st.t_success[t] && e.codeword[t] != st.D(s, t)) ++dis;
      if (Rational(as_i64(dis)) < row_limit) {
        st.E.set_row(s, e.codeword);
        st.u_success[s] = true;
        break;
      }
    }
  }

  // Phase 4: erasure-decode every column of E.
  st.C = Grid(n2, n1, 0);
  st.phase4_unique = true;
  for (std::size_t t = 0; t < n1 && st.phase4_unique; ++t) {
    const UniqueDecode u = unique_decode_erasures(ctx.c2, st.E.column(t));
    if (u.status != UniqueStatus::kUnique) {
      st.phase4_unique = false;
      break;
    }
    st.C.set_column(t, u.codeword);
  }
  if (st.phase4_unique) {
    const Distance d = distance(st.C.flat(), ctx.received.flat());
    st.emitted = static_cast<std::int64_t>(d.errors) <= ctx.target_errors;
  }
  return st;
}

}  // namespace

SampleSizes sample_sizes(double delta1, double ell1, double ell2, double eps, std::size_t n1, std::size_t n2) {
  if (!(delta1 > 0) || !(ell1 > 0) || !(ell2 > 0) || !(eps > 0))
    throw Error(Errc::kDomainError, "sample sizes need positive parameters");
  SampleSizes s;
  s.m1_real = std::log(8 * ell1 / eps) / (2 * delta1 * delta1);
  s.m2_real = std::log(8 * ell2 / eps) / (2 * eps * eps);
  s.m1 = capped_ceil(s.m1_real, n1, s.capped1);
  s.m2 = capped_ceil(s.m2_real, n2, s.capped2);
  return s;
}

double sampling_tail(double gamma, std::size_t m, bool full_set) {
  if (full_set) return 0;
  return 2 * std::exp(-2 * gamma * gamma * static_cast<double>(m));
}

double predicted_success(const SampleSizes& sizes, double delta1, double ell1, double ell2, double eps) {
  const double p_eps_m2 = sampling_tail(eps, sizes.m2, sizes.capped2);
  const double p_d1_m1 = sampling_tail(delta1, sizes.m1, sizes.capped1);
  return 1 - p_eps_m2 - ell1 * p_d1_m1 / eps - ell2 * p_eps_m2 / eps;
}

TensorDecodeResult tensor_decode(const LinearCode& c1, const LinearCode& c2, const Grid& received,
                                 const TensorDecodeOptions& opt) {
  if (!(c1.field() == c2.field())) throw Error(Errc::kFieldMismatch, "tensor factors over different fields");
  const std::size_t n1 = c1.length();
  const std::size_t n2 = c2.length();
  if (received.rows() != n2 || received.cols() != n1)
    throw Error(Errc::kLengthMismatch, "received grid must be n2 x n1");
  if (!(opt.eps > Rational(0))) throw Error(Errc::kDomainError, "eps must be positive");

  TensorDecodeResult res;
  const Rational delta1 = c1.relative_distance();
  const Rational delta2 = c2.relative_distance();
  res.eta_star = min(delta1 * opt.eta2, delta2 * opt.eta1);
  res.target = res.eta_star - Rational(3) * opt.eps;
  if (res.target < Rational(0))
    throw Error(Errc::kDomainError, "decoding radius eta* - 3 eps = " + res.target.str() + " is negative");

  const std::int64_t row_radius = max_count_at_most(opt.eta1 * Rational(as_i64(n1)));
  const std::int64_t col_radius = max_count_at_most(opt.eta2 * Rational(as_i64(n2)));
  Context ctx{c1, c2, received, opt, n1, n2, {}, {}, 0};
  ctx.target_errors = max_count_at_most(res.target * Rational(as_i64(n1 * n2)));
  for (std::size_t s = 0; s < n2; ++s) {
    ctx.row_lists.push_back(list_decode_brute(c1, received.row(s), row_radius));
    res.max_row_list = std::max(res.max_row_list, ctx.row_lists.back().size());
  }
  for (std::size_t t = 0; t < n1; ++t) {
    ctx.column_lists.push_back(list_decode_brute(c2, received.column(t), col_radius));
    res.max_column_list = std::max(res.max_column_list, ctx.column_lists.back().size());
  }

  const double ell1 = opt.ell1 > 0 ? opt.ell1 : static_cast<double>(std::max<std::size_t>(1, res.max_row_list));
  const double ell2 = opt.ell2 > 0 ? opt.ell2 : static_cast<double>(std::max<std::size_t>(1, res.max_column_list));
  res.sizes = sample_sizes(delta1.to_double(), ell1, ell2, opt.eps.to_double(), n1, n2);
  if (opt.m1_override) {
    res.sizes.m1 = std::min(*opt.m1_override, n1);
    res.sizes.capped1 = res.sizes.m1 == n1;
  }
  if (opt.m2_override) {
    res.sizes.m2 = std::min(*opt.m2_override, n2);
    res.sizes.capped2 = res.sizes.m2 == n2;
  }

  Rng rng(opt.seed);
  const std::vector<std::size_t> T = sample_subset(rng, n1, res.sizes.m1);
  const std::vector<std::size_t> S = sample_subset(rng, n2, res.sizes.m2);

  if (opt.mode == AdviceMode::kPlanted) {
    if (!opt.planted) throw Error(Errc::kDomainError, "planted mode needs a planted codeword");
    const Grid& C = *opt.planted;
    if (C.rows() != n2 || C.cols() != n1) throw Error(Errc::kLengthMismatch, "planted grid must be n2 x n1");
    Grid A(S.size(), T.size());
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j) A(i, j) = C(S[i], T[j]);
    PhaseState st = run_branch(ctx, S, T, A);
    ++res.advice_tried;
    if (!st.phase4_unique) ++res.phase4_failures;
    if (st.emitted) res.list.push_back(st.C);
    res.planted_state = std::move(st);
  } else {
    const std::uint64_t cells = static_cast<std::uint64_t>(S.size()) * T.size();
    const std::uint64_t count = saturating_pow(c1.field().order(), cells);
    if (count > opt.advice_cap)
      throw Error(Errc::kAdviceSpaceTooLarge,
                  "q^(m1 m2) = " + std::to_string(c1.field().order()) + "^" + std::to_string(cells) +
                      " exceeds the advice cap " + std::to_string(opt.advice_cap));
    Grid A(S.size(), T.size(), 0);
    const std::uint32_t q = c1.field().order();
    while (true) {
      PhaseState st = run_branch(ctx, S, T, A);
      ++res.advice_tried;
      if (!st.phase4_unique) ++res.phase4_failures;
      if (st.emitted) res.list.push_back(std::move(st.C));
      std::size_t pos = cells;
      while (pos-- > 0) {
        Symbol& cell = A(pos / T.size(), pos % T.size());
        cell = static_cast<Symbol>((cell + 1u) % q);
        if (cell != 0) break;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
  }
  std::sort(res.list.begin(), res.list.end());
  res.list.erase(std::unique(res.list.begin(), res.list.end()), res.list.end());
  return res;
}

PhaseDiagnostics phase_diagnostics(const PhaseState& st, const Grid& C, const Rational& delta1,
                                   const Rational& delta2, const Rational& eps) {
  PhaseDiagnostics d;
  const std::size_t n2 = st.E.rows();
  const std::size_t n1 = st.E.cols();
  d.s_size = st.S.size();
  for (std::size_t i = 0; i < st.S.size(); ++i) {
    if (!st.s_success[i]) continue;
    ++d.s_success;
    bool right = true;
    for (std::size_t t = 0; t < n1 && right; ++t) right = st.B(i, t) == C(st.S[i], t);
    ++(right ? d.s_right : d.s_wrong);
  }
  for (std::size_t t = 0; t < n1; ++t) {
    if (!st.t_success[t]) continue;
    ++d.t_success;
    bool right = true;
    for (std::size_t s = 0; s < n2 && right; ++s) right = st.D(s, t) == C(s, t);
    ++(right ? d.t_right : d.t_wrong);
  }
  for (std::size_t s = 0; s < n2; ++s) {
    if (!st.u_success[s]) continue;
    ++d.u_success;
    bool right = true;
    for (std::size_t t = 0; t < n1 && right; ++t) right = st.E(s, t) == C(s, t);
    if (!right) ++d.u_wrong;
  }
  const Rational one(1);
  const Rational S(as_i64(d.s_size));
  const Rational N1(as_i64(n1));
  const Rational N2(as_i64(n2));
  const auto R = [](std::size_t x) { return Rational(as_i64(x)); };
  d.phase1 = R(d.s_success) >= (one - delta2 + Rational(2) * eps) * S && R(d.s_right) >= (one - delta2 + eps) * S &&
             R(d.s_wrong) <= eps * S;
  d.phase2 = R(d.t_success) >= (one - delta1 + Rational(3) * eps) * N1 &&
             R(d.t_right) >= (one - delta1 + Rational(2) * eps) * N1 && R(d.t_wrong) <= eps * N1;
  d.phase3 = d.u_wrong == 0 && R(d.u_success) >= (one - delta2 + Rational(3) * eps) * N2;
  d.phase4 = st.phase4_unique && st.C == C;
  d.implication_holds = !(d.phase1 && d.phase2 && d.phase3) || d.phase4;
  return d;
}

TensorWitness tensor_lower_witness(const LinearCode& code, std::span<const Symbol> r, const std::vector<Word>& list) {
  if (code.codeword_count() < 2) throw Error(Errc::kTrivialCode, "witness needs a nonzero codeword");
  const std::size_t n = code.length();
  if (r.size() != n) throw Error(Errc::kLengthMismatch, "received word length");
  const Field& f = code.field();
  const Word c0 = code.min_weight_codeword();
  const auto outer = [&](std::span<const Symbol> v) {
    Grid g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g(a, b) = f.mul(c0[a], v[b]);
    return g;
  };
  TensorWitness w;
  w.received = outer(r);
  for (const Word& c : list) {
    Grid g = outer(c);
    const Distance d = distance(g.flat(), w.received.flat());
    w.max_distance = max(w.max_distance, Rational(as_i64(d.errors), as_i64(n * n)));
    w.codewords.push_back(std::move(g));
  }
  return w;
}

}  // namespace ldlab
