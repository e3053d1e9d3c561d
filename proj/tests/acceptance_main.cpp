// Acceptance gate: one criterion per headline guarantee, a PASS/FAIL line
// each, exit status 0 only when every criterion holds.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "recip/census.hpp"
#include "recip/classify.hpp"
#include "recip/disc_identities.hpp"
#include "recip/errors.hpp"
#include "recip/fourier.hpp"
#include "recip/intfactor.hpp"
#include "recip/intpoly.hpp"
#include "recip/poisson.hpp"
#include "recip/ratfactor.hpp"
#include "recip/reciprocal.hpp"
#include "recip/rng.hpp"
#include "recip/splitting.hpp"
#include "recip/subgroups.hpp"
#include "recip/wreath.hpp"

using namespace recip;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return std::string(buf);
}

IntPoly random_poly_deg(Rng& rng, int deg, long height) {
  std::vector<mpz_class> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = static_cast<long>(rng.uniform(-height, height));
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

std::vector<SplittingType> all_shapes(int n) {
  std::vector<SplittingType> out;
  std::vector<FactorShape> partial;
  auto rec = [&](auto&& self, int remaining, int min_f, int min_e_at_min_f) -> void {
    if (!partial.empty()) out.push_back(SplittingType::of(partial));
    for (int f = min_f; f <= remaining; ++f) {
      int e_start = f == min_f ? min_e_at_min_f : 1;
      for (int e = e_start; e * f <= remaining; ++e) {
        partial.push_back({f, e});
        self(self, remaining - e * f, f, e);
        partial.pop_back();
      }
    }
  };
  rec(rec, n, 1, 1);
  return out;
}

std::vector<SplittingType> marked_variants(const SplittingType& sigma, MarkAt where) {
  std::vector<SplittingType> out;
  for (size_t i = 0; i < sigma.parts.size(); ++i) {
    if (sigma.parts[i].f != 1) continue;
    if (i > 0 && sigma.parts[i] == sigma.parts[i - 1]) continue;
    SplittingType m;
    m.parts.push_back(sigma.parts[i]);
    for (size_t j = 0; j < sigma.parts.size(); ++j)
      if (j != i) m.parts.push_back(sigma.parts[j]);
    m.marked = where;
    out.push_back(m);
  }
  return out;
}

// censuses computed by the growth criterion and reused by the suppression one
struct CensusCache {
  bool ready = false;
  std::vector<std::pair<long, CensusTallies>> nonmonic;  // n = 2, H in {8..64}
  std::vector<std::pair<long, CensusTallies>> monic;     // n = 2, H in {32..256}
};

CensusCache g_census;

// ---------------------------------------------------------------------------

std::string criterion_disc_bridge() {
  Rng rng = Rng(20250819).derive(1);
  long total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 10'000; ++i) {
      IntPoly g = random_poly_deg(rng, n, 50);
      SymPair pair = expand(g, n);
      mpz_class via_g = disc_f_via_g(pair);
      mpz_class via_f = discriminant(pair.f);
      expect(via_g == via_f,
             fmt("mismatch at n=%d, g=%s", n, g.str().c_str()));
      ++total;
    }
  }
  return fmt("%ld random pairs across n=1..5, exact agreement", total);
}

std::string criterion_square_flags() {
  Rng rng = Rng(20250819).derive(1);  // the same sample stream as the bridge-identity check
  long checked = 0, skipped = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 10'000; ++i) {
      IntPoly g = random_poly_deg(rng, n, 50);
      SymPair pair = expand(g, n);
      mpz_class disc_f = discriminant(pair.f);
      if (disc_f == 0) {
        ++skipped;
        continue;
      }
      mpz_class disc_g = discriminant(pair.g);
      expect(g1_flag(pair) == is_square_int(disc_f),
             fmt("first flag mismatch at n=%d, g=%s", n, g.str().c_str()));
      expect(g2_flag(pair) == is_square_int(disc_f * disc_g),
             fmt("second flag mismatch at n=%d, g=%s", n, g.str().c_str()));
      ++checked;
    }
  }
  return fmt("%ld separable pairs checked (%ld degenerate skipped), zero failures", checked,
             skipped);
}

void check_census_level(int n, const std::vector<std::pair<SubgroupTag, long>>& expected) {
  std::vector<SubgroupClass> census = overgroup_census(n);
  expect(census.size() == expected.size(),
         fmt("n=%d: %zu classes, expected %zu", n, census.size(), expected.size()));
  long full_order = (1L << n);
  for (int i = 2; i <= n; ++i) full_order *= i;
  std::vector<bool> used(census.size(), false);
  for (const auto& [tag, order] : expected) {
    bool found = false;
    for (size_t i = 0; i < census.size(); ++i) {
      if (used[i] || census[i].tag != tag || census[i].order != order) continue;
      expect(census[i].order * census[i].index == full_order,
             fmt("n=%d: order*index mismatch for %s", n, tag_name(tag).c_str()));
      expect(census[i].class_size >= 1, fmt("n=%d: empty class %s", n, tag_name(tag).c_str()));
      used[i] = found = true;
      break;
    }
    expect(found, fmt("n=%d: no class tagged %s of order %ld", n, tag_name(tag).c_str(), order));
  }
}

std::string criterion_overgroup_census() {
  check_census_level(2, {{SubgroupTag::FULL, 8},
                         {SubgroupTag::G1, 4},
                         {SubgroupTag::G2, 4},
                         {SubgroupTag::SN_PLAIN, 2}});
  check_census_level(3, {{SubgroupTag::FULL, 48},
                         {SubgroupTag::G1, 24},
                         {SubgroupTag::G2, 24},
                         {SubgroupTag::G3, 12},
                         {SubgroupTag::SN_PLAIN, 6},
                         {SubgroupTag::SN_TWISTED, 6}});
  check_census_level(4, {{SubgroupTag::FULL, 384},
                         {SubgroupTag::G1, 192},
                         {SubgroupTag::G2, 192},
                         {SubgroupTag::G3, 48},
                         {SubgroupTag::EXC_2S4, 48},
                         {SubgroupTag::SN_PLAIN, 24},
                         {SubgroupTag::SN_TWISTED, 24}});

  // the exceptional order-48 class: inside the twisted-sign kernel, vector
  // part exactly the diagonal, with genuinely off-diagonal flip components
  std::vector<WreathElement> exc = tag_members(SubgroupTag::EXC_2S4, 4);
  expect(exc.size() == 48, fmt("exceptional class has %zu members", exc.size()));
  bool off_diagonal = false;
  std::vector<std::uint32_t> fixed_v;
  for (const WreathElement& e : exc) {
    expect(embed_3n(e).sign() == 1, "exceptional member escapes the twisted-sign kernel");
    if (e.sigma.is_identity()) fixed_v.push_back(e.v);
    if (e.v != 0 && e.v != 15) off_diagonal = true;
  }
  std::sort(fixed_v.begin(), fixed_v.end());
  expect(fixed_v == std::vector<std::uint32_t>{0, 15},
         "exceptional vector part is not the diagonal");
  expect(off_diagonal, "exceptional class is a plain diagonal product");
  return "17 classes across n=2..4 match the frozen lists, exceptional class verified";
}

std::string criterion_cocycles() {
  for (int n = 2; n <= 5; ++n) {
    long h1 = cocycle_count(n, CoeffModule::mod_diagonal_perp).h1;
    expect(h1 == 2, fmt("perp quotient at n=%d gives %ld classes, expected 2", n, h1));
  }
  for (int n : {3, 5}) {
    long hd = cocycle_count(n, CoeffModule::mod_diagonal).h1;
    expect(hd == 1, fmt("diagonal quotient at n=%d gives %ld classes, expected 1", n, hd));
    long hf = cocycle_count(n, CoeffModule::full).h1;
    expect(hf == 2, fmt("full module at n=%d gives %ld classes, expected 2", n, hf));
  }
  return "8 cohomology class counts exact, including n=5";
}

std::string criterion_transforms() {
  double max_env = 0;
  int combos = 0;
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    for (int n : {2, 3}) {
      for (const SplittingType& sigma : all_shapes(n)) {
        if (sigma.index() > 2) continue;
        for (bool monic : {false, true}) {
          TransformCheck tc = transform_check(p, n, sigma, false, monic);
          expect(tc.envelope_constant <= 4.0,
                 fmt("envelope %.3f at p=%llu n=%d shape %s monic=%d", tc.envelope_constant,
                     static_cast<unsigned long long>(p), n, sigma.str().c_str(), monic));
          max_env = std::max(max_env, tc.envelope_constant);
          ++combos;
        }
        for (MarkAt side : {MarkAt::plus_two, MarkAt::minus_two}) {
          for (const SplittingType& m : marked_variants(sigma, side)) {
            for (bool monic : {false, true}) {
              TransformCheck tc = transform_check(p, n, m, true, monic);
              expect(tc.support_in_subspace,
                     fmt("pointed weight leaks support at p=%llu n=%d shape %s",
                         static_cast<unsigned long long>(p), n, m.str().c_str()));
              expect(tc.envelope_constant <= 4.0,
                     fmt("pointed envelope %.3f at p=%llu n=%d shape %s monic=%d",
                         tc.envelope_constant, static_cast<unsigned long long>(p), n,
                         m.str().c_str(), monic));
              max_env = std::max(max_env, tc.envelope_constant);
              ++combos;
            }
          }
        }
      }
    }
  }
  return fmt("%d weight transforms bounded, max envelope constant %.3f", combos, max_env);
}

std::string criterion_poisson() {
  Rng rng(60701);
  double max_residual = 0;
  int done = 0;
  auto run_one = [&](int dim, long diag_hi, long off_hi, const std::vector<std::uint64_t>& mods) {
    std::vector<std::vector<long>> basis(static_cast<size_t>(dim),
                                         std::vector<long>(static_cast<size_t>(dim), 0));
    long det = 1;
    for (int i = 0; i < dim; ++i) {
      basis[static_cast<size_t>(i)][static_cast<size_t>(i)] =
          static_cast<long>(rng.uniform(1, diag_hi));
      det *= basis[static_cast<size_t>(i)][static_cast<size_t>(i)];
      for (int j = 0; j < i; ++j)
        basis[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            static_cast<long>(rng.uniform(-off_hi, off_hi));
    }
    std::uint64_t M = mods[static_cast<size_t>(rng.uniform(0, static_cast<long>(mods.size()) - 1))];
    while (std::gcd(static_cast<std::uint64_t>(det), M) != 1)
      M = mods[static_cast<size_t>(rng.uniform(0, static_cast<long>(mods.size()) - 1))];
    std::uint64_t table = 1;
    for (int i = 0; i < dim; ++i) table *= M;
    std::vector<double> psi(table);
    for (double& v : psi) v = 2.0 * rng.unit_real() - 1.0;
    double width = std::sqrt(static_cast<double>(M)) * (0.8 + 0.8 * rng.unit_real());
    TwistedPoissonReport rep = twisted_poisson_check(dim, basis, M, psi, width);
    double residual = static_cast<double>(rep.residual);
    expect(residual <= 1e-9, fmt("residual %.3e in dimension %d with M=%llu", residual, dim,
                                 static_cast<unsigned long long>(M)));
    max_residual = std::max(max_residual, residual);
    ++done;
  };
  for (int i = 0; i < 20; ++i) run_one(1, 3, 2, {1, 2, 3, 5, 7});
  for (int i = 0; i < 20; ++i) run_one(2, 3, 2, {1, 2, 3, 5, 7});
  for (int i = 0; i < 10; ++i) run_one(3, 2, 1, {1, 2, 3});
  return fmt("%d randomized instances, max residual %.2e", done, max_residual);
}

std::string criterion_double_disc() {
  Rng rng(40302);
  for (int n = 2; n <= 4; ++n) {
    int nonzero = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<mpz_class> b(static_cast<size_t>(n));
      for (auto& v : b) v = static_cast<long>(rng.uniform(-8, 8));
      if (b.back() == 0) b.back() = 3;
      FznRReport rep = fzn_R_identity_check(b);
      expect(rep.matches, fmt("factorization mismatch at n=%d", n));
      if (rep.lhs != 0) {
        expect(rep.sign == 1, fmt("unexpected sign %d at n=%d", rep.sign, n));
        ++nonzero;
      }
    }
    expect(nonzero >= 1, fmt("all double discriminants vanished at n=%d", n));
  }
  return "300 evaluation points across n=2..4, identity exact up to the recorded sign";
}

std::string criterion_xyz_count() {
  for (std::uint64_t H = 1; H <= 500; ++H)
    expect(count_xyz_square(H) == count_xyz_square_brute(H),
           fmt("count mismatch at H=%llu", static_cast<unsigned long long>(H)));
  std::vector<std::pair<long, std::uint64_t>> samples;
  for (long H : {64, 128, 256, 512, 1024})
    samples.emplace_back(H, count_xyz_square(static_cast<std::uint64_t>(H)));
  FitReport fit = fit_asymptotic(samples, 1.0, 1.0);
  expect(fit.ratio <= 1.8, fmt("growth constant spread %.3f exceeds 1.8", fit.ratio));
  return fmt("brute agreement to H=500, scaled constant spread %.3f over H=64..1024", fit.ratio);
}

std::string criterion_census_growth() {
  CensusOptions opts;
  opts.workers = 8;
  double lo = 0, hi = 0;
  for (long H : {8, 16, 32, 64}) {
    CensusRecord rec = run_census(2, H, false, opts);
    g_census.nonmonic.emplace_back(H, rec.tallies);
    expect(rec.tallies.g1 > 0, fmt("no first-flag items at H=%ld", H));
    double c = static_cast<double>(rec.tallies.g1) /
               (static_cast<double>(H) * H * std::log(static_cast<double>(H)));
    lo = lo == 0 ? c : std::min(lo, c);
    hi = std::max(hi, c);
  }
  double spread_free = hi / lo;
  expect(spread_free <= 2.5, fmt("free-family constant spread %.3f exceeds 2.5", spread_free));

  lo = hi = 0;
  for (long H : {32, 64, 128, 256}) {
    CensusRecord rec = run_census(2, H, true, opts);
    g_census.monic.emplace_back(H, rec.tallies);
    expect(rec.tallies.g1 > 0, fmt("no first-flag items at monic H=%ld", H));
    double c = static_cast<double>(rec.tallies.g1) /
               (static_cast<double>(H) * std::log(static_cast<double>(H)));
    lo = lo == 0 ? c : std::min(lo, c);
    hi = std::max(hi, c);
  }
  double spread_monic = hi / lo;
  expect(spread_monic <= 2.5, fmt("monic constant spread %.3f exceeds 2.5", spread_monic));
  g_census.ready = true;
  return fmt("normalized first-flag constants spread %.3f (free) and %.3f (monic)", spread_free,
             spread_monic);
}

std::string criterion_flag_suppression() {
  expect(g_census.ready, "census growth criterion did not complete");
  std::string detail;
  for (const auto* family : {&g_census.nonmonic, &g_census.monic}) {
    double prev = -1;
    for (const auto& [H, t] : *family) {
      expect(t.g1 > 0, fmt("no first-flag items at H=%ld", H));
      double r = static_cast<double>(t.g2) / static_cast<double>(t.g1);
      if (prev >= 0)
        expect(r <= 1.2 * prev,
               fmt("flag ratio rose from %.4f to %.4f at H=%ld", prev, r, H));
      prev = r;
      detail += fmt("%s%.3f", detail.empty() ? "" : " ", r);
    }
  }
  return "second/first flag ratios " + detail + " (free then monic families)";
}

std::string criterion_cube_field() {
  // constructed members: g for which the cube-field value is a square by
  // design, over the three smallest squarefree scales
  int built = 0;
  for (long k : {2, 3, 5}) {
    int from_this_k = 0;
    for (long t = -10; t <= 10 && built < 20 && from_this_k < 7; ++t) {
      if (t == 2) continue;  // degenerate: g(-2) vanishes
      IntPoly g{-2 * t * t - 2 * k, t * t - 4 * t - k, 2 * t - 2, 1};
      if (!is_irreducible_q(g)) continue;
      SymPair pair = expand(g, 3);
      TriFlag flag = g3_flag(pair, 10);
      expect(flag == TriFlag::yes,
             fmt("constructed member (k=%ld, t=%ld) reported %s", k, t, tri_name(flag).c_str()));
      ++built;
      ++from_this_k;
    }
  }
  expect(built == 20, fmt("only %d constructed members were usable", built));

  // random cubics with a certified symmetric group and both square flags
  // false should be refuted; any hits are cross-checked against the
  // empirical Frobenius statistics (distance to the matched group table)
  Rng rng(11211);
  int examined = 0, yes = 0, undetermined = 0, matched_g3 = 0, matched_sym = 0;
  while (examined < 1000) {
    std::vector<mpz_class> c{static_cast<long>(rng.uniform(-20, 20)),
                             static_cast<long>(rng.uniform(-20, 20)),
                             static_cast<long>(rng.uniform(-20, 20)), mpz_class(1)};
    IntPoly g(c);
    SymPair pair = expand(g, 3);
    bool in_g1 = false;
    try {
      in_g1 = g1_flag(pair);
    } catch (const SeparabilityError&) {
      continue;
    }
    if (in_g1 || g2_flag(pair)) continue;
    if (sn_certificate(g, 300) != CertStatus::certified) continue;
    ++examined;
    TriFlag flag = g3_flag(pair, 10);
    if (flag == TriFlag::yes) {
      ++yes;
      // a true positive sits inside the distinguished index-4 overgroup, so the
      // empirical statistics must match that group's table or one of the
      // symmetric copies it contains
      FingerprintReport fp = frobenius_fingerprint(pair.f, 1000);
      bool compatible = fp.best_tag == SubgroupTag::G3 || fp.best_tag == SubgroupTag::SN_PLAIN ||
                        fp.best_tag == SubgroupTag::SN_TWISTED;
      expect(compatible && fp.tv_distance <= 0.1,
             fmt("positive %s contradicted by statistics (nearest %s, tv %.3f)", g.str().c_str(),
                 tag_name(fp.best_tag).c_str(), fp.tv_distance));
      if (fp.best_tag == SubgroupTag::G3) ++matched_g3;
      else ++matched_sym;
    } else if (flag == TriFlag::undetermined) {
      ++undetermined;
    } else {
      expect(flag == TriFlag::no, "unexpected flag state");
    }
  }
  expect(yes <= 25, fmt("%d positives exceed the recorded handful", yes));
  expect(undetermined <= 10, fmt("%d undetermined results exceed the budget", undetermined));
  return fmt(
      "20 constructed members positive; 1000 certified flag-free cubics: %d positive "
      "(%d matching the overgroup table, %d a symmetric copy), %d undetermined",
      yes, matched_g3, matched_sym, undetermined);
}

std::string criterion_index_valuation() {
  Rng rng(31415);
  const std::uint64_t primes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  long checked = 0, skipped = 0;
  for (int i = 0; i < 10'000; ++i) {
    int deg = 1 + static_cast<int>(rng.uniform(0, 5));
    IntPoly g = random_poly_deg(rng, deg, 30);
    std::uint64_t p = primes[rng.uniform(0, 9)];
    IndexValuationReport rep = index_valuation_check(g, p);
    expect(rep.status != IndexValuationReport::Status::violated,
           fmt("index %d exceeds valuation %d for g=%s mod %llu", rep.index, rep.valuation,
               g.str().c_str(), static_cast<unsigned long long>(p)));
    if (rep.holds())
      ++checked;
    else
      ++skipped;
  }
  expect(checked > 9000, fmt("only %ld informative samples", checked));
  return fmt("%ld samples checked (%ld degenerate skipped), zero violations", checked, skipped);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"discriminant bridge identity", criterion_disc_bridge},
      {"square-flag equivalences", criterion_square_flags},
      {"overgroup census", criterion_overgroup_census},
      {"one-cocycle class counts", criterion_cocycles},
      {"transform main terms and decay envelopes", criterion_transforms},
      {"twisted summation residuals", criterion_poisson},
      {"double discriminant factorization", criterion_double_disc},
      {"square-product box count", criterion_xyz_count},
      {"census growth stability", criterion_census_growth},
      {"second-flag suppression", criterion_flag_suppression},
      {"cube-field classifier", criterion_cube_field},
      {"index-valuation inequality", criterion_index_valuation},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[i].run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%2zu] %s (%.1fs): %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return 1;
}
