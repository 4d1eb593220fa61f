// Runs acceptance criteria 1 to 11 and prints one PASS/FAIL line for each.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "gpiverify/gausshyp.hpp"
#include "gpiverify/inequality.hpp"
#include "gpiverify/moments.hpp"
#include "gpiverify/parallel.hpp"
#include "gpiverify/soscert.hpp"

using namespace gpiv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

BigRational R(const char* s) { return BigRational::parse(s); }

struct Criterion {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << "first failure: " << what;
      ok = false;
    }
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::filesystem::path cert_path(long m2) {
  return default_data_dir() / "certs" / ("h" + std::to_string(m2) + "_sos.json");
}

Sign refined_sign(const std::function<RationalInterval(const BigRational&)>& enclose) {
  BigRational w(1, 1000000);
  for (int i = 0; i <= 20; ++i, w /= BigRational(2)) {
    const Sign s = enclose(w).sign();
    if (s != Sign::indeterminate) return s;
  }
  return Sign::indeterminate;
}

void c1(Criterion& c) {
  double worst = 0;
  std::vector<SosCertificate> certs;
  for (long m2 = 1; m2 <= 7; ++m2) {
    const auto t0 = Clock::now();
    const SosCertificate cert = load_certificate(cert_path(m2));
    const CheckReport r = verify_sos(cert);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    c.require(r.status == Status::verified && !r.residual, "certificate h" + std::to_string(m2) + " residual");
    c.require(dt < 5, "certificate h" + std::to_string(m2) + " took " + std::to_string(dt) + " s");
    certs.push_back(cert);
  }
  std::mt19937_64 gen(20240607);
  int flipped = 0;
  for (int i = 0; i < 50; ++i) {
    SosCertificate m = certs[static_cast<std::size_t>(i) % certs.size()];
    std::uniform_int_distribution<std::size_t> sq(0, m.squares.size() - 1);
    MultiPoly& p = (i % 2 == 0) ? m.target : m.squares[sq(gen)].poly;
    std::uniform_int_distribution<std::size_t> term(0, p.size() - 1);
    auto it = p.terms().begin();
    std::advance(it, static_cast<long>(term(gen)));
    MultiPoly bump(p.vars());
    bump.add_term(it->first, BigRational(1));
    p += bump;
    if (verify_sos(m).status == Status::residual_nonzero) ++flipped;
  }
  c.require(flipped == 50, "only " + std::to_string(flipped) + " of 50 mutations flipped");
  c.notes << (c.ok ? "" : "; ") << "7 certificates, slowest " << worst << " s, " << flipped << "/50 mutations flipped";
}

void c2(Criterion& c) {
  for (long m2 = 1; m2 <= 7; ++m2) {
    c.require(verify_h_expansion(m2, default_data_dir()).status == Status::verified, "h" + std::to_string(m2) + " expansion");
    c.require(verify_bracket_positivity(m2, default_data_dir()).status == Status::verified,
              "h" + std::to_string(m2) + " bracket decomposition");
  }
  const MultiPoly h1 = h_poly(1);
  c.require(poly_eval(h1, {{"b", BigRational(0)}, {"c", BigRational(0)}}) == BigRational(20), "h1(0,0) = 20");
  c.require(h1.coeff({{"b", 6}, {"c", 6}}) == R("8/3"), "coefficient of b^6 c^6 in h1");
  c.notes << "h1..h7 match the bundled expansions; brackets decompose";
}

void c3(Criterion& c) {
  const MultiPoly g = g_poly();
  bool even = true, nonneg = true;
  for (const auto& [m, coef] : g.terms()) {
    for (auto e : m) even = even && e % 2 == 0;
    nonneg = nonneg && coef.sign() >= 0;
  }
  c.require(even, "even exponents");
  c.require(nonneg, "nonnegative coefficients");
  c.require(g.degree("a") <= 16 && g.degree("b") <= 16 && g.degree("c") <= 18, "degrees");
  const MultiPoly app = load_poly_json(default_data_dir() / "g_appendix.json");
  const CheckReport prop = verify_proportional(app, g);
  c.require(prop.status == Status::verified, "proportionality");
  BigRational scalar;
  if (prop.details.contains("scalar")) scalar = R(prop.details["scalar"].get<std::string>().c_str());
  c.require(scalar.sign() > 0, "positive scalar");
  c.require(app.constant_term() == R("148260632637820250986905600"), "appendix constant term");
  const BigRational f880 =
      poly_eval(f_truncated_poly(), {{"x2", BigRational(8)}, {"x3", BigRational(8)}, {"u", BigRational(0)}});
  c.require(f880 == pow(BigRational(2), 50) * BigRational(BigInt(factorial(17) * factorial(17))), "f(8,8,0)");
  c.notes << (c.ok ? "" : "; ") << g.size() << " terms, degrees (" << g.degree("a") << "," << g.degree("b") << ","
          << g.degree("c") << "), appendix/g = " << scalar;
}

void c4(Criterion& c) {
  const auto t0 = Clock::now();
  std::vector<BigRational> xs;
  for (int k = -10; k <= 10; ++k) xs.emplace_back(BigRational(k, 10));
  for (long d : {3L, 7L}) {
    xs.emplace_back(BigRational(1, d));
    xs.emplace_back(BigRational(-1, d));
  }
  const auto counts = parallel_map(9, workers(), [&](std::size_t i) {
    const long m2 = static_cast<long>(i);
    int agree = 0;
    for (long m3 = 0; m3 <= 8; ++m3)
      for (const auto& x : xs) {
        const auto pair = GaussianPair::unit(x);
        if (even_moment(m2, m3, pair) == wick_moment(2 * m2, 2 * m3, pair) &&
            odd_moment(m2, m3, pair) == wick_moment(2 * m2 + 1, 2 * m3 + 1, pair))
          ++agree;
      }
    return agree;
  });
  int agree = 0;
  for (int n : counts) agree += n;
  const double dt = seconds_since(t0);
  c.require(agree == 81 * 25, std::to_string(81 * 25 - agree) + " mismatching cases");
  c.require(dt < 60, "runtime " + std::to_string(dt) + " s");
  c.notes << (c.ok ? "" : "; ") << agree << " of " << 81 * 25 << " (m2,m3,x) cases agree, " << dt << " s";
}

void c5(Criterion& c) {
  int zero = 0, total = 0;
  for (long m2 = 0; m2 <= 10; ++m2)
    for (long m3 = 0; m3 <= 10; ++m3)
      for (const auto& cc : {BigRational(1, 2), BigRational(3, 2)})
        for (auto rel : {ContiguousRelation::rel21, ContiguousRelation::rel31, ContiguousRelation::rel37,
                         ContiguousRelation::rel38, ContiguousRelation::derivative}) {
          ++total;
          if (contiguous_residual(rel, m2, m3, cc).is_zero()) ++zero;
        }
  c.require(zero == total, std::to_string(total - zero) + " nonzero residuals");
  int ones = 0;
  for (long m2 = 0; m2 <= 12; ++m2)
    for (long m3 = 0; m3 <= 12; ++m3)
      for (const auto& cc : {BigRational(1, 2), BigRational(3, 2)}) {
        const HypParams hp{m2, m3, cc};
        const bool same = hyp_value_at_one(hp) == poly_eval(hyp_poly(hp), "z", BigRational(1));
        c.require(same, "value at one");
        ones += same;
      }
  c.notes << (c.ok ? "" : "; ") << zero << "/" << total << " residuals zero, " << ones << " values at one agree";
}

void c6(Criterion& c) {
  for (long m2 = 1; m2 <= 12; ++m2)
    for (long m3 = 1; m3 <= 12; ++m3) {
      const GpiParams p = make_params(m2, m3);
      const BigRational closed = BigRational(2 * (m2 + m3 + 1)) / BigRational(2 + (2 * m2 + 1) * (2 * m3 + 1));
      const RationalInterval direct = H_value(p, BigRational(1), BigRational(1, 1000000));
      c.require(direct.is_point() && direct.lo() == closed && H_at_one(p) == closed, "H(1) mismatch");
    }
  std::mt19937_64 gen(4242);
  std::uniform_int_distribution<long> m(1, 30), k(1, 9999);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const GpiParams p = make_params(m(gen), m(gen));
    const BigRational z(k(gen), 10000);
    try {
      const QuadraticForm q = make_quadratic_form(p, z);
      const BigRational s = p.d() * (1 - p.r * z) / p.P();
      if (q.beta * q.beta - (1 - z) * q.gamma == s * s + p.P() * z) ++ok;
    } catch (const std::logic_error&) {
    }
  }
  c.require(ok == 100, "quadratic form identity failed " + std::to_string(100 - ok) + " times");
  c.notes << (c.ok ? "" : "; ") << "H(1) exact for m2,m3 <= 12; identity exact on " << ok << "/100 random triples";
}

void c7(Criterion& c) {
  int points = 0, strict = 0, equal = 0;
  for (auto [m2, m3] : std::vector<std::pair<long, long>>{{1, 1}, {1, 5}, {2, 3}, {3, 3}, {7, 7}, {8, 8}, {8, 12}}) {
    const GpiParams p = make_params(m2, m3);
    for (int ka = -3; ka <= 3; ++ka)
      for (int kx = -10; kx <= 10; ++kx) {
        const CheckReport r = check_gpi(p, BigRational(ka, 4), BigRational(kx, 10));
        ++points;
        const int s = r.margin->sign();
        c.require(s >= 0, "negative margin at (" + std::to_string(m2) + "," + std::to_string(m3) + ")");
        if (s > 0) ++strict;
        if (s == 0) ++equal;
      }
  }
  // X1 = X2 + a X3 is never independent of X2, so every margin must be strict.
  c.require(equal == 0, std::to_string(equal) + " zero margins");
  const CheckReport known = check_gpi(make_params(1, 1), BigRational(-1), R("1/2"));
  c.require(*known.margin == R("1/2"), "margin at (1,1), a=-1, x=1/2 is " + known.margin->str());
  c.notes << (c.ok ? "" : "; ") << strict << "/" << points << " strict margins; known point margin " << *known.margin;
}

void c8(Criterion& c) {
  const BigRational w(1, 1000000);
  int held = 0;
  for (auto [m2, m3] : std::vector<std::pair<long, long>>{{1, 5}, {2, 3}, {3, 3}, {5, 9}}) {
    const GpiParams p = make_params(m2, m3);
    for (int k = -10; k <= 10; ++k) {
      const bool h = check_mri(p, GaussianPair::unit(BigRational(k, 10)), w).status == Status::holds;
      c.require(h, "MRI fails for (" + std::to_string(m2) + "," + std::to_string(m3) + ") at x=" + std::to_string(k) + "/10");
      held += h;
    }
  }
  const GpiParams p11 = make_params(1, 1);
  const CheckReport at1 = check_mri(p11, GaussianPair::unit(BigRational(1)), w);
  c.require(at1.status == Status::fails && at1.details["lhs"] == "5/9" && H_at_one(p11) == R("6/11") &&
                R("5/9") > R("6/11"),
            "(1,1) at x=1");
  const CheckReport v11 = find_mri_violation(p11, 100, w);
  const CheckReport v22 = find_mri_violation(make_params(2, 2), 100, w);
  c.require(v11.status == Status::verified, "no witness for (1,1)");
  c.require(v22.status == Status::verified, "no witness for (2,2)");
  c.notes << (c.ok ? "" : "; ") << held << "/84 grid correlations hold; (1,1) fails at x=1 with 5/9 > 6/11; "
          << v22.details["violations"].size() << " witnesses for (2,2), first "
          << (v22.witnesses.empty() ? "-" : v22.witnesses[0].where);
}

void c9(Criterion& c) {
  int points = 0, agree = 0;
  for (auto [m2, m3] : std::vector<std::pair<long, long>>{{1, 5}, {2, 3}, {3, 3}, {5, 9}}) {
    const GpiParams p = make_params(m2, m3);
    const auto grid = z_grid({BigRational(1) / (p.r * p.r), BigRational(1), true, true}, 101);
    const auto res = parallel_map(grid.size(), workers(), [&](std::size_t i) {
      const BigRational& z = grid[i];
      const int s = hfri_check(p, z).margin->sign();
      const Sign ratio = refined_sign([&](const BigRational& w) { return hfri_ratio_margin(p, z, w); });
      return std::make_pair(s, ratio);
    });
    for (const auto& [s, ratio] : res) {
      ++points;
      c.require(s > 0, "S not positive");
      if ((s > 0 && ratio == Sign::positive) || (s < 0 && ratio == Sign::negative)) ++agree;
    }
  }
  c.require(agree == points, std::to_string(points - agree) + " sign disagreements");
  c.notes << (c.ok ? "" : "; ") << points << " exact S evaluations positive; " << agree << " agree with the ratio enclosure";
}

void c10(Criterion& c) {
  int lemma = 0;
  for (auto [m2, m3] : std::vector<std::pair<long, long>>{{8, 8}, {8, 12}, {10, 10}}) {
    const GpiParams p = make_params(m2, m3);
    for (Predicate pred : {Predicate::h_half, Predicate::h_seventh}) {
      ScanOptions o;
      o.grid_n = 51;
      const CheckReport r = scan(pred, p, o);
      c.require(r.status == Status::holds, std::string(to_string(pred)) + " scan");
      lemma += r.details["counts"]["holds"].get<int>();
    }
  }
  for (long m2 = 8; m2 <= 12; ++m2)
    for (long m3 = m2; m3 <= 12; ++m3) c.require(G_at_one(make_params(m2, m3)).sign() < 0, "G(1) not negative");
  const GpiParams p88 = make_params(8, 8);
  ScanOptions o;
  o.jobs = workers();
  const CheckReport g = scan(Predicate::g_negative, p88, o);
  c.require(g.status == Status::holds && g.details["counts"]["indeterminate"] == 0, "G scan");
  const CheckReport a = scan(Predicate::aug13v, p88, o);
  c.require(a.status == Status::holds, "aug13v scan");
  o.grid_n = 51;
  const CheckReport rr = scan(Predicate::rrrr, p88, o);
  c.require(rr.status == Status::holds, "rrrr scan");
  c.notes << (c.ok ? "" : "; ") << lemma << "/306 lemma points; G(1) < 0 for 15 pairs; G scan " << g.message
          << "; aug13v " << a.message << "; rrrr " << rr.message;
}

void c11(Criterion& c) {
  const RealGpiParams rp = make_real_params(13, 13);
  int pos = 0, total = 0;
  for (int ka = -3; ka <= 3; ++ka)
    for (int kx = -10; kx <= 10; ++kx) {
      const double x = std::clamp(kx / 10.0, -kMaxRealCorrelation, kMaxRealCorrelation);
      const CheckReport r = check_gpi_real(rp, ka / 4.0, x);
      ++total;
      if (r.status == Status::holds && *r.margin_float > 0) ++pos;
    }
  c.require(pos == total, std::to_string(total - pos) + " real GPI points not positive");
  const CheckReport v = find_mri_real_violation(make_real_params(4, 4.3), 100);
  c.require(v.status == Status::verified, "no MRI analog violation for (4, 4.3)");

  struct Mc {
    MixedKind kind;
    double y2, y3, x;
  };
  const std::vector<Mc> configs = {
      {MixedKind::plain, 1.0, 1.0, 0.5},        {MixedKind::odd_signed, 1.0, 1.0, 0.5},
      {MixedKind::even_shift2, 1.0, 1.0, 0.5},  {MixedKind::plain, 2.5, 1.5, -0.3},
      {MixedKind::odd_signed, 2.5, 1.5, -0.3},  {MixedKind::even_shift2, 0.5, 2.0, 0.7},
      {MixedKind::plain, 3.0, 4.0, 0.9},        {MixedKind::odd_signed, 0.7, 1.3, 0.8},
      {MixedKind::even_shift2, 1.5, 0.5, -0.6}, {MixedKind::odd_signed, 4.0, 4.3, 0.46},
  };
  const auto zs = parallel_map(configs.size(), workers(), [&](std::size_t i) {
    const Mc& m = configs[i];
    McExponents e{m.y2, m.y3, false, false};
    if (m.kind == MixedKind::even_shift2) e.p3 += 2;
    if (m.kind == MixedKind::odd_signed) e = {m.y2 + 1, m.y3 + 1, true, true};
    const double series = mixed_abs_moment_real(m.kind, m.y2, m.y3, m.x);
    const McResult r = mc_moment(e, 1, 1, m.x, 10000000, 1000 + i);
    return std::abs(r.mean - series) / r.stderr_;
  });
  double worst = 0;
  for (double z : zs) worst = std::max(worst, z);
  c.require(worst <= 4, "Monte Carlo deviation " + std::to_string(worst) + " standard errors");
  c.notes << (c.ok ? "" : "; ") << pos << "/" << total << " real GPI margins positive; " << v.message
          << " for (4,4.3); worst Monte Carlo deviation " << worst << " standard errors";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Criterion&)>> criteria = {
      {"SOS certificates", c1},       {"h regeneration", c2},  {"g structure and appendix", c3},
      {"moment oracle equivalence", c4}, {"hypergeometric identities", c5}, {"H closed form and identity", c6},
      {"GPI grids", c7},              {"MRI", c8},             {"HFRI via S", c9},
      {"case analysis for m2 >= 8", c10}, {"real-exponent path", c11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): "
              << c.notes.str() << " [" << seconds_since(t0) << " s]" << std::endl;
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
