// One PASS/FAIL line per acceptance criterion. `--only N` runs a single one.
// Exit status is nonzero when any selected criterion fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zoo/borwein_integral.hpp"
#include "zoo/digits.hpp"
#include "zoo/entries.hpp"
#include "zoo/gosper.hpp"
#include "zoo/lattice.hpp"
#include "zoo/polya.hpp"
#include "zoo/specfun.hpp"
#include "zoo/theta_moments.hpp"

using namespace zoo;

namespace {

// Pinned tolerances and budgets.
constexpr long kC1Digits = 60, kC1Match = 50;
constexpr double kC1Seconds = 60;
constexpr long kC2Digits = 110, kC2Match = 100, kC2Steps = 200;
constexpr long kC3Digits = 50, kC3GridMatch = 35;
constexpr double kC3Seconds = 30;
constexpr long kC4Digits = 50, kC4Match = 40;
constexpr double kC4Factor = 10, kC4Seconds = 120;
constexpr double kC5Seconds = 60;
constexpr double kC6Seconds = 20;
constexpr double kC7ExactTol = 1e-8, kC7QuadTol = 1e-10, kC7Seconds = 600;
constexpr std::uint64_t kC7Samples = 1'000'000'000, kC7Seed = 20240917;
constexpr double kC8Seconds = 1800;

// Collects named sub-checks; the criterion passes when all of them do.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
    ++count_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    std::ostringstream s;
    s << (count_ - failed_.size()) << "/" << count_ << " checks";
    for (const auto& f : failed_) s << "; FAILED: " << f;
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  std::vector<std::string> failed_, notes_;
  std::size_t count_ = 0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool agree(const BigReal& a, const BigReal& b, long digits) {
  BigReal scale = max(abs(b), BigReal(1L, b.precision()));
  return abs(a - b) <= pow10(-digits, b.precision()) * scale;
}

// A quoted decimal is reproduced when the value lies within one unit of its
// last printed place.
bool reproduces(const BigReal& value, const std::string& quoted) {
  const Precision p = value.precision();
  const BigReal q = BigReal::parse(quoted, p);
  long places = 0;
  const auto dot = quoted.find('.');
  const auto e = quoted.find_first_of("eE");
  if (dot != std::string::npos) places = static_cast<long>((e == std::string::npos ? quoted.size() : e) - dot - 1);
  long exponent = e == std::string::npos ? 0 : std::stol(quoted.substr(e + 1));
  return abs(value - q) < pow10(exponent - places, p);
}

std::string sci(const BigReal& x, long d = 6) { return x.to_string(d); }

// zeta(s) by Euler-Maclaurin at N = 100 with 60 Bernoulli corrections.
BigReal zeta_em(int s, Precision p) {
  const long N = 100;
  BigReal sum(0L, p);
  for (long n = 1; n < N; ++n) sum += pow(BigReal(n, p), -s);
  const BigReal nn(N, p);
  sum += pow(nn, 1 - s) / static_cast<long>(s - 1) + pow(nn, -s) / 2L;
  BigReal rising(static_cast<long>(s), p), fact(2L, p);
  for (int j = 1; j <= 60; ++j) {
    sum += BigReal(bernoulli_b2n(j), p) / fact * rising * pow(nn, -s - 2 * j + 1);
    rising *= BigReal(static_cast<long>(s + 2 * j - 1), p) * static_cast<long>(s + 2 * j);
    fact *= static_cast<long>((2 * j + 1) * (2 * j + 2));
  }
  return sum;
}

RealVector last_column(const TriangularProductSpec& spec, long n, const PrecisionContext& ctx) {
  RealMatrix m = partial_product_pairwise(spec, n, ctx);
  RealVector col;
  for (int i = 0; i < spec.dim_n; ++i) col.push_back(m[i][spec.dim_n]);
  return col;
}

// ---------------------------------------------------------------- 1

bool criterion1(Check& c) {
  auto ctx = PrecisionContext::with_digits(kC1Digits);
  const Precision p = ctx.precision();
  const BigReal pi = const_pi(p);
  const BigReal z2 = pi * pi / 6L, z4 = pow(pi, 4L) / 90L, z6 = pow(pi, 6L) / 945L;
  auto timed = [&](EvenVariant v, const char* name) {
    auto t0 = Clock::now();
    RealVector col = last_column(zeta_even_spec(v), 500, ctx);
    const double s = seconds_since(t0);
    c.expect(s <= kC1Seconds, std::string(name) + " runtime");
    return col;
  };
  RealVector z4col = timed(EvenVariant::Zeta4, "zeta4");
  c.expect(agree(z4col[0], z4, kC1Match), "zeta(4) to 50 digits");
  c.expect(agree(z4col[1], z2, kC1Match), "zeta(2) to 50 digits");

  RealVector raw = timed(EvenVariant::Zeta6Uncorrected, "zeta6");
  const BigReal delta = raw[0] - z6;
  c.expect(delta.to_string(6) == "4.38668e-1", "delta = 0.438668 (got " + sci(delta, 12) + ")");
  c.expect(agree(delta, delta_constant(500, ctx), kC1Match), "delta matches its series");

  RealVector fixed = timed(EvenVariant::Zeta6Corrected, "zeta6-corrected");
  c.expect(agree(fixed[0], z6, kC1Match), "corrected product = pi^6/945 to 50 digits");
  c.note("delta " + sci(delta, 12));
  return c.ok();
}

// ---------------------------------------------------------------- 2

bool criterion2(Check& c) {
  auto ctx = PrecisionContext::with_digits(kC2Digits);
  const Precision p = ctx.precision();
  const BigReal z3 = zeta_em(3, p), z5 = zeta_em(5, p);
  RealVector one = last_column(zeta_odd_spec(1), kC2Steps, ctx);
  RealVector two = last_column(zeta_odd_spec(2), kC2Steps, ctx);
  c.expect(agree(one[0], z3, kC2Match), "N=1 product vs zeta(3)");
  c.expect(agree(two[0], z5, kC2Match), "N=2 product vs zeta(5)");
  c.expect(agree(two[1], z3, kC2Match), "N=2 product vs zeta(3)");
  c.note("|N=1 - zeta(3)| = " + sci(abs(one[0] - z3), 3));
  return c.ok();
}

// ---------------------------------------------------------------- 3

bool criterion3(Check& c) {
  auto t0 = Clock::now();
  auto ctx = PrecisionContext::with_digits(kC3Digits);
  const Precision p = ctx.precision();
  const BigReal q = exp(BigReal::parse("-0.5", p));
  const BigReal m2 = second_moment_ratio_exact(q, ctx);
  const BigReal m4 = fourth_moment_ratio_exact(q, ctx);
  const BigReal corr = fourth_moment_correction(q, ctx);
  const BigReal t2 = theta2_second_moment_ratio_exact(q, ctx);
  const UnitVarianceSolution s = solve_unit_variance(ctx);
  auto quote = [&](const BigReal& v, const std::string& text, const std::string& what) {
    c.expect(reproduces(v, text), what + " " + text + " (got " + v.to_string(14) + ")");
  };
  quote(m2, "0.9999997887677", "second-moment ratio");
  quote(m4, "3.000000707", "fourth-moment ratio");
  quote(corr, "8.33912e-6", "fourth-moment correction");
  quote(t2, "1.000000211232", "theta2 ratio");
  quote(s.c, "0.49999989438", "c");
  quote(s.k, "0.99999997859", "k");

  bool grid = true;
  for (int i = 1; i <= 19; ++i) {
    const BigReal qq = BigReal(static_cast<long>(i), p) / 20L;
    const BigReal s0 = theta_moment_sum(qq, ThetaOffset::Zero, 0, ctx);
    const BigReal h0 = theta_moment_sum(qq, ThetaOffset::Half, 0, ctx);
    grid = grid && agree(theta_moment_sum(qq, ThetaOffset::Zero, 2, ctx) / s0,
                         second_moment_ratio_exact(qq, ctx), kC3GridMatch);
    grid = grid && agree(theta_moment_sum(qq, ThetaOffset::Zero, 4, ctx) / s0,
                         fourth_moment_ratio_exact(qq, ctx), kC3GridMatch);
    grid = grid && agree(theta_moment_sum(qq, ThetaOffset::Half, 2, ctx) / h0,
                         theta2_second_moment_ratio_exact(qq, ctx), kC3GridMatch);
  }
  c.expect(grid, "direct sums vs closed forms on q = 0.05..0.95");
  c.expect(seconds_since(t0) <= kC3Seconds, "runtime");
  return c.ok();
}

// ---------------------------------------------------------------- 4

bool criterion4(Check& c) {
  auto t0 = Clock::now();
  auto ctx = PrecisionContext::with_digits(kC4Digits);
  const Precision p = ctx.precision();
  const BigReal a(10L, p);
  for (const char* lam : {"1", "1.5", "2", "5"}) {
    const BigReal l = BigReal::parse(lam, p);
    const BigReal primal = student_lattice_sum(a, l, ctx);
    const BigReal dual = dual_bessel_sum(a, l, ctx);
    c.expect(agree(primal, dual, kC4Match), std::string("primal = dual at lambda ") + lam);
  }
  const BigReal ls = lambda_star(a, ctx);
  const BigReal measured = abs(student_lattice_sum(a, ls, ctx) - beta(BigReal(0.5, p), ls - BigReal(0.5, p), ctx));
  const BigReal model = worst_case_error(a, ctx);
  const BigReal ratio = measured / model;
  c.expect(ratio <= BigReal(kC4Factor, p) && ratio >= BigReal(1 / kC4Factor, p),
           "deviation at lambda* within x10 of sqrt(2/a)e^{-pi a} (measured " + sci(measured, 4) +
               ", model " + sci(model, 4) + ")");

  auto big = PrecisionContext::with_digits(30);
  const LatticeSumResult full =
      evaluate_lattice(BigReal(100000L, big.precision()), BigReal(5L, big.precision()), big);
  const std::string text = full.dual_correction.to_string(2);
  const long exponent = full.dual_correction.decimal_exponent();
  c.expect(full.method == "dual-bessel", "full scale uses the dual side");
  c.expect(text.substr(0, 3) == "2.2", "leading digits 2.2 (got " + text + ")");
  c.expect(exponent == -272856, "exponent -272856 (got " + std::to_string(exponent) + ")");
  c.expect(seconds_since(t0) <= kC4Seconds, "runtime");
  return c.ok();
}

// ---------------------------------------------------------------- 5

bool criterion5(Check& c) {
  auto t0 = Clock::now();
  bool grid = true, alt = true;
  for (int n = 1; n <= 25; ++n) {
    for (long d = 1; d <= 5; ++d) {
      const BigRational sym = cycle_index_sum_symmetric(n, d);
      grid = grid && sym == BigRational(binomial(BigInt(n + d - 1), BigInt(n)));
      if (n > d) alt = alt && cycle_index_sum_alternating(n, d) == sym;
    }
  }
  c.expect(grid, "enumeration = C(n+d-1, n) for n <= 25, d <= 5");
  c.expect(alt, "alternating = symmetric for n > d");
  c.expect(closed_form_symmetric(100, 101).get_str() ==
               "90548514656103281165404177077484163874504589675413336841320",
           "C(200, 100) digits");
  c.expect(seconds_since(t0) <= kC5Seconds, "runtime");
  return c.ok();
}

// ---------------------------------------------------------------- 6

bool criterion6(Check& c) {
  auto t0 = Clock::now();
  auto ctx = PrecisionContext::with_digits(150);
  const Precision p = ctx.precision();
  const BigReal direct = direct_sum(10, 400, ctx);
  const BigReal eps = BigReal(approx_fraction(10), p) - direct;
  c.expect(eps > BigReal::parse("1.0e-105", p) && eps < BigReal::parse("1.2e-105", p),
           "k=10 epsilon in (1.0, 1.2)e-105 (got " + sci(eps) + ")");

  auto wide = PrecisionContext::with_digits(260);
  const Precision pw = wide.precision();
  const BigReal eps100 = BigReal(approx_fraction(100), pw) -
                         direct_sum(100, default_direct_terms(100, 260), wide);
  c.expect(eps100 > pow10(-211, pw) && eps100 < pow10(-209, pw),
           "k=100 epsilon in (1e-211, 1e-209) (got " + sci(eps100) + ")");

  bool round_trip = true;
  long k = 1;
  for (int e = 1; e <= 6; ++e) {
    k *= 10;
    BigRational parsed(pattern_string(e));
    parsed.canonicalize();
    round_trip = round_trip && parsed == approx_fraction(k);
  }
  c.expect(round_trip, "pattern_string(p) round-trips for p <= 6");
  c.expect(seconds_since(t0) <= kC6Seconds, "runtime");
  c.note("epsilon(10) " + sci(eps) + ", epsilon(100) " + sci(eps100));
  return c.ok();
}

// ---------------------------------------------------------------- 7

bool criterion7(Check& c) {
  auto t0 = Clock::now();
  auto ctx = PrecisionContext::with_digits(25);
  const Precision p = ctx.precision();
  const BigReal half_pi = const_pi(p) / 2L;
  const auto rows = ladder_table(7, kC7QuadTol, ctx);
  bool exact = true;
  for (int n = 0; n <= 6; ++n) {
    exact = exact && rows[n].verdict == Verdict::ExactPiOver2A0 &&
            abs(rows[n].value - half_pi) < BigReal(kC7ExactTol, p);
  }
  c.expect(exact, "EXACT rungs within 1e-8 of pi/2");
  const LadderRow& last = rows[7];
  c.expect(last.verdict == Verdict::Deficit, "last rung is DEFICIT");
  c.expect(last.relative_deficit.to_string(2) == BigReal::parse("6.267e-7", p).to_string(2),
           "relative deficit 6.267e-7 to 2 digits (got " + sci(last.relative_deficit) + ")");
  c.expect(last.abs_error_estimate < half_pi - last.value, "error estimate below the deficit");

  const MonteCarloResult mc = convolution_tail_oracle(ladder_spec(7), kC7Samples, kC7Seed);
  const double rel = last.relative_deficit.to_double();
  c.expect(mc.lower <= rel && rel <= mc.upper, "Monte-Carlo 95% interval contains the deficit ratio");
  std::ostringstream s;
  s << "MC " << mc.hits << "/" << mc.samples << " -> [" << mc.lower << ", " << mc.upper << "]";
  c.note(s.str());
  c.expect(seconds_since(t0) <= kC7Seconds, "runtime");
  return c.ok();
}

// ---------------------------------------------------------------- 8

bool criterion8(Check& c) {
  auto t0 = Clock::now();
  {
    auto ctx = PrecisionContext::with_digits(50);
    const Precision p = ctx.precision();
    bool ok = true;
    for (const char* a : {"1", "2", "10"})
      for (const char* l : {"1", "1.5", "2", "5"}) {
        const BigReal aa = BigReal::parse(a, p), ll = BigReal::parse(l, p);
        ok = ok && agree(student_lattice_sum(aa, ll, ctx), dual_bessel_sum(aa, ll, ctx), 40);
      }
    c.expect(ok, "Poisson two-sided grid");
  }
  {
    auto ctx = PrecisionContext::with_digits(40);
    const Precision p = ctx.precision();
    const BigReal pi = const_pi(p);
    bool modular = true, legendre = true;
    for (const char* t : {"0.3", "0.5", "1", "1.7", "3"}) {
      const BigReal tt = BigReal::parse(t, p);
      modular = modular && agree(theta3(exp(-(pi * tt)), ctx),
                                 theta3(exp(-(pi / tt)), ctx) / sqrt(tt), 38);
    }
    for (const char* k : {"0.1", "0.5", "0.9", "0.999"}) {
      const BigReal kk = BigReal::parse(k, p), kp = sqrt(1L - kk * kk);
      const BigReal K = elliptic_K(kk, ctx), E = elliptic_E(kk, ctx);
      const BigReal Kp = elliptic_K(kp, ctx), Ep = elliptic_E(kp, ctx);
      legendre = legendre && agree(E * Kp + Ep * K - K * Kp, pi / 2L, 38);
    }
    c.expect(modular, "theta3 modular identity");
    c.expect(legendre, "Legendre relation");
  }
  {
    HyperHarmonic h2(2), h4(4);
    bool ok = true;
    for (long n = 1; n <= 500; ++n) {
      const BigRational a = h2.value(n);
      ok = ok && a * a == 2 * h2.bivariate(2, n) + h4.value(n);
    }
    c.expect(ok, "hyper-harmonic square identity");
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    bool same = true;
    for (int trial = 0; trial < 40; ++trial) {
      const int dim = 1 + trial % 4;
      std::vector<BigRational> alpha, beta;
      std::vector<RationalVector> u;
      for (int k = 0; k < 16; ++k) {
        long an = 0;
        while (an == 0) an = num(rng);
        alpha.push_back(make_rational(an, den(rng)));
        beta.push_back(make_rational(num(rng), den(rng)));
        RationalVector uk;
        for (int i = 0; i < dim; ++i) uk.push_back(make_rational(num(rng), den(rng)));
        u.push_back(uk);
      }
      TriangularProductSpec spec;
      spec.dim_n = dim;
      spec.alpha = [alpha](long k) { return alpha[k - 1]; };
      spec.beta = [beta](long k) { return beta[k - 1]; };
      spec.u = [u](long k) { return u[k - 1]; };
      const long n = 1 + trial % 16;
      const RationalMatrix direct = partial_product_exact(spec, n);
      const RationalVector closed = v_partial_closed_exact(spec, n);
      for (int i = 0; i < dim; ++i) same = same && direct[i][dim] == closed[i];
    }
    c.expect(same, "direct vs closed product on random specs");
  }
  {
    bool integral = true;
    for (int n = 1; n <= 25; ++n)
      for (long d = 1; d <= 5; ++d)
        integral = integral && cycle_index_sum_symmetric(n, d).get_den() == 1 &&
                   cycle_index_sum_alternating(n, d).get_den() == 1;
    c.expect(integral, "cycle-index sums are integers");
  }
  {
    bool ok = true;
    for (long k : {2L, 3L, 7L, 10L}) {
      auto ctx = PrecisionContext::with_digits(60);
      const long terms = default_direct_terms(k, 60);
      ok = ok && abs(direct_sum(k, terms, ctx) - gf_closed_sum(k, kDefaultGfTerms, ctx)) <=
                     direct_sum_tail_bound(k, terms, ctx.precision()) + pow10(-55, ctx.precision());
    }
    c.expect(ok, "generating function vs direct digit sums");
  }
  c.expect(seconds_since(t0) <= kC8Seconds, "runtime");
  return c.ok();
}

// ---------------------------------------------------------------- 9

bool criterion9(Check& c) {
  const RunAllResult r = run_all_from_json("", default_manifest_path());
  c.expect(r.exit_code == 0, "run-all exit code 0 (got " + std::to_string(r.exit_code) + ")");
  auto verdict = [&](const std::string& id) -> std::string {
    for (const auto& row : r.rows)
      if (row.entry_id == id) return row.actual;
    return "missing";
  };
  const std::pair<const char*, const char*> key[] = {
      {"entry1", "FRAUD"},       {"entry2-zeta4", "TRUE"}, {"entry2-zeta6", "FALSE"},
      {"entry3-m2", "FRAUD"},    {"entry3-m4", "FRAUD"},   {"entry4", "TRUE"},
      {"entry5", "FRAUD"},       {"borwein-integral", "FRAUD"}};
  for (auto [id, want] : key) c.expect(verdict(id) == want, std::string(id) + " " + want);
  bool ladder = false;
  for (const auto& rep : r.reports)
    if (rep.entry_id == "borwein-integral")
      for (const auto& n : rep.notes) ladder = ladder || n == "ladder: EXACT x6, then DEFICIT";
  c.expect(ladder, "Borwein ladder EXACT x6 then DEFICIT");
  return c.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<bool(Check&)>> all = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    if (only && only != i) continue;
    Check c;
    const auto t0 = Clock::now();
    bool pass = false;
    try {
      pass = all[i - 1](c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s (%.1f s) %s\n", i, pass ? "PASS" : "FAIL", seconds_since(t0),
                c.summary().c_str());
    std::fflush(stdout);
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
