// Command line front end: one binary, one verb per task.
//
//   recip classify --poly "1,3,1"        flag report for a single polynomial
//   recip census   --n 2 --H 5           exhaustive box census
//   recip xyz      --H 1000              count xy = z^2 boxes, with a fit line
//   recip fourier  --p 5 --n 2 --sigma "1^2"   transform decay report
//   recip groups   --n 3                 overgroup classes of the doubled box
//   recip verify   [--suite all]         self-checks, PASS/FAIL per line
//
// Exit codes: 0 success, 1 verification/resource failure, 2 usage or data
// error.  --workers/--seed also read RECIP_WORKERS/RECIP_SEED.

#include <cctype>
#include <cmath>
#include <thread>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recip/census.hpp"
#include "recip/classify.hpp"
#include "recip/disc_identities.hpp"
#include "recip/errors.hpp"
#include "recip/fourier.hpp"
#include "recip/intfactor.hpp"
#include "recip/intpoly.hpp"
#include "recip/poisson.hpp"
#include "recip/polytext.hpp"
#include "recip/reciprocal.hpp"
#include "recip/rng.hpp"
#include "recip/splitting.hpp"
#include "recip/subgroups.hpp"
#include "recip/wreath.hpp"

using nlohmann::json;
using namespace recip;

namespace {

constexpr const char* kSchema = "recip/v1";

struct GlobalOpts {
  int workers = 1;
  std::uint64_t seed = 0;
  long budget = 1000;  // certificate prime budget
};

// ---------------------------------------------------------------------------
// small parsing helpers

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_small_int(const std::string& tok, const char* what) {
  if (tok.empty()) throw ShapeError(std::string("empty ") + what);
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ShapeError(std::string("bad ") + what + " '" + tok + "'");
  long v = std::stol(tok);
  if (v < 1 || v > 64) throw ShapeError(std::string(what) + " out of range: " + tok);
  return static_cast<int>(v);
}

// "1^2,1" -> parts {(f=1,e=2),(f=1,e=1)}.  With a mark the first token is the
// pinned linear cluster.
SplittingType parse_sigma(const std::string& text, const std::string& pointed) {
  SplittingType sigma;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) throw ShapeError("empty factor token in shape");
    FactorShape part;
    size_t caret = token.find('^');
    if (caret == std::string::npos) {
      part.f = parse_small_int(token, "factor degree");
    } else {
      part.f = parse_small_int(token.substr(0, caret), "factor degree");
      part.e = parse_small_int(token.substr(caret + 1), "factor multiplicity");
    }
    sigma.parts.push_back(part);
  }
  if (sigma.parts.empty()) throw ShapeError("empty factor shape");
  if (pointed.empty()) return SplittingType::of(sigma.parts);
  if (pointed == "+2")
    sigma.marked = MarkAt::plus_two;
  else if (pointed == "-2")
    sigma.marked = MarkAt::minus_two;
  else
    throw ShapeError("--pointed takes +2 or -2");
  if (sigma.parts.front().f != 1)
    throw ShapeError("the marked cluster must be linear");
  return sigma;
}

json flags_to_json(const IntPoly& f, const GaloisFlags& fl) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "classify_report";
  j["poly"] = format_poly(f);
  j["n"] = fl.n;
  j["separable"] = fl.separable;
  j["g_irreducible"] = fl.g_irreducible;
  j["gg_full_sn"] = cert_name(fl.gg_full_sn);
  j["in_g1"] = fl.in_g1;
  j["in_g2"] = fl.in_g2;
  j["in_g3"] = tri_name(fl.in_g3);
  j["reducible_f"] = fl.reducible_f;
  if (fl.fingerprint) {
    json fp;
    fp["samples"] = fl.fingerprint->samples;
    fp["best_tag"] = tag_name(fl.fingerprint->best_tag);
    fp["tv_distance"] = fl.fingerprint->tv_distance;
    j["fingerprint"] = fp;
  }
  return j;
}

json tallies_to_json(const CensusTallies& t) {
  json j;
  j["total"] = t.total;
  j["inseparable"] = t.inseparable;
  j["reducible_f"] = t.reducible_f;
  j["g1"] = t.g1;
  j["g2"] = t.g2;
  j["g3"] = t.g3;
  j["gg_not_sn"] = t.gg_not_sn;
  j["sn_undetermined"] = t.sn_undetermined;
  return j;
}

std::string census_csv(const CensusRecord& r) {
  std::ostringstream out;
  out << "n,H,monic,total,inseparable,reducible_f,g1,g2,g3,gg_not_sn,wall_time\n";
  out << r.n << ',' << r.H << ',' << (r.monic ? 1 : 0) << ',' << r.tallies.total
      << ',' << r.tallies.inseparable << ',' << r.tallies.reducible_f << ','
      << r.tallies.g1 << ',' << r.tallies.g2 << ',' << r.tallies.g3 << ','
      << r.tallies.gg_not_sn << ',';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
  out << buf << '\n';
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ShapeError("cannot open output file '" + path + "'");
  out << text;
}

std::string wreath_str(const WreathElement& w) {
  std::string bits;
  for (int i = 0; i < w.n(); ++i) bits += ((w.v >> i) & 1u) ? '1' : '0';
  return bits + " | " + w.sigma.str();
}

// ---------------------------------------------------------------------------
// verbs

int cmd_classify(const GlobalOpts& g, const std::string& poly_text) {
  IntPoly f = parse_poly(poly_text);
  ClassifyBudgets budgets;
  budgets.cert_primes = g.budget;
  json j;
  try {
    GaloisFlags fl = classify(f, budgets);
    j = flags_to_json(f, fl);
  } catch (const SeparabilityError&) {
    j["schema"] = kSchema;
    j["kind"] = "classify_report";
    j["poly"] = format_poly(f);
    j["separable"] = false;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_census(const GlobalOpts& g, int n, long H, bool monic,
               const std::string& out_path, const std::string& checkpoint,
               const std::string& format) {
  CensusOptions opts;
  opts.workers = g.workers;
  opts.seed = g.seed;
  opts.budgets.cert_primes = g.budget;
  opts.checkpoint_path = checkpoint;
  CensusRecord rec = run_census(n, H, monic, opts);
  if (format == "csv") {
    write_output(out_path, census_csv(rec));
  } else if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "census_record";
    j["n"] = rec.n;
    j["H"] = rec.H;
    j["monic"] = rec.monic;
    j["seed"] = rec.seed;
    j["workers"] = rec.worker_count;
    j["wall_seconds"] = rec.wall_seconds;
    j["tallies"] = tallies_to_json(rec.tallies);
    write_output(out_path, j.dump() + "\n");  // one record per line
  } else {
    throw ShapeError("--format takes json or csv");
  }
  return 0;
}

int cmd_xyz(long H) {
  std::uint64_t count = count_xyz_square(H);
  std::cout << count << '\n';
  if (H >= 64) {
    std::vector<std::pair<long, std::uint64_t>> samples;
    for (long h : {H / 8, H / 4, H / 2, H})
      samples.push_back({h, count_xyz_square(h)});
    FitReport fit = fit_asymptotic(samples, 1, 1);
    std::ostringstream line;
    line.precision(4);
    line << "fit: count(H) / (H log H) in [" << fit.c_low << ", " << fit.c_high
         << "], spread ratio " << fit.ratio;
    std::cout << line.str() << '\n';
  }
  return 0;
}

int cmd_fourier(std::uint64_t p, int n, const std::string& sigma_text,
                const std::string& pointed, bool monic) {
  SplittingType sigma = parse_sigma(sigma_text, pointed);
  bool is_pointed = !pointed.empty();
  TransformCheck chk = transform_check(p, n, sigma, is_pointed, monic);
  json j;
  j["schema"] = kSchema;
  j["kind"] = "fourier_report";
  j["p"] = p;
  j["n"] = n;
  j["sigma"] = sigma.str();
  j["pointed"] = is_pointed;
  j["monic"] = monic;
  j["d"] = chk.d;
  j["k"] = chk.k;
  j["zero_value"] = chk.zero_value.get_str();
  j["main_term"] = chk.main_term.get_str();
  j["off_exponent"] = chk.off_exponent;
  j["max_off_support"] = chk.max_off_support;
  j["envelope_constant"] = chk.envelope_constant;
  j["support_in_subspace"] = chk.support_in_subspace;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_groups(int n, bool with_generators) {
  std::vector<SubgroupClass> classes = overgroup_census(n);
  json arr = json::array();
  for (const SubgroupClass& c : classes) {
    json j;
    j["tag"] = tag_name(c.tag);
    j["order"] = c.order;
    j["index"] = c.index;
    j["class_size"] = c.class_size;
    if (with_generators) {
      json gens = json::array();
      for (const WreathElement& w : c.generators) gens.push_back(wreath_str(w));
      j["generator_words"] = gens;
    }
    arr.push_back(j);
  }
  json out;
  out["schema"] = kSchema;
  out["kind"] = "group_census";
  out["n"] = n;
  out["subgroups"] = arr;
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify: quick self-checks over the library surface

struct Check {
  std::string name;
  bool ok = false;
};

void run_poly_suite(std::vector<Check>& out) {
  {
    Check c{"coefficient text round trip"};
    IntPoly f = parse_poly("1,3,1");
    c.ok = (f.degree() == 2 && format_poly(f) == "1,3,1");
    out.push_back(c);
  }
  {
    Check c{"resultant and discriminant hand fixtures"};
    mpz_class r = resultant(IntPoly{-3, 1}, IntPoly{1, 0, 1});
    mpz_class d = discriminant(IntPoly{-2, 0, 1});
    c.ok = (r == 10 && d == 8);
    out.push_back(c);
  }
  {
    Check c{"palindromic expansion and its discriminant"};
    SymPair pair = expand(IntPoly{-2, 0, 1}, 2);
    bool shape = (pair.f == IntPoly{1, 0, 0, 0, 1});
    mpz_class bridged = disc_f_via_g(pair);
    c.ok = shape && bridged == 256 && bridged == discriminant(pair.f);
    out.push_back(c);
  }
  {
    Check c{"radical and square multiple fixtures"};
    RadicalPair a = radical_and_square_multiple(12);
    RadicalPair b = radical_and_square_multiple(8);
    c.ok = (a.radical == 6 && a.square_multiple == 6 && b.radical == 2 &&
            b.square_multiple == 4 && squarefree_part(-8) == -2);
    out.push_back(c);
  }
  {
    Check c{"random expansion discriminants agree"};
    Rng rng(20260819);
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      int n = static_cast<int>(rng.uniform(1, 3));
      std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
      for (auto& v : coeffs) v = static_cast<long>(rng.uniform(-9, 9));
      coeffs.back() = 1;
      IntPoly g(coeffs);
      SymPair pair = expand(g, n);
      ok = (disc_f_via_g(pair) == discriminant(pair.f));
    }
    c.ok = ok;
    out.push_back(c);
  }
}

void run_disc_suite(std::vector<Check>& out) {
  {
    Check c{"double discriminant identity on fixtures"};
    FznRReport a = fzn_R_identity_check({2, 1});
    FznRReport b = fzn_R_identity_check({-3, 5, 1});
    c.ok = a.matches && b.matches;
    out.push_back(c);
  }
  {
    Check c{"double discriminant identity on random data"};
    Rng rng(77);
    bool ok = true;
    for (int trial = 0; trial < 15 && ok; ++trial) {
      size_t n = static_cast<size_t>(rng.uniform(2, 3));
      std::vector<mpz_class> b(n);
      for (auto& v : b) v = static_cast<long>(rng.uniform(-5, 5));
      if (b.back() == 0) b.back() = 1;
      ok = fzn_R_identity_check(b).matches;
    }
    c.ok = ok;
    out.push_back(c);
  }
  {
    Check c{"index bounded by discriminant valuation"};
    Rng rng(1234);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    bool ok = true;
    for (int trial = 0; trial < 300 && ok; ++trial) {
      int deg = static_cast<int>(rng.uniform(2, 5));
      std::vector<mpz_class> coeffs(static_cast<size_t>(deg) + 1);
      for (auto& v : coeffs) v = static_cast<long>(rng.uniform(-20, 20));
      if (coeffs.back() == 0) coeffs.back() = 1;
      IntPoly g(coeffs);
      std::uint64_t p = primes[rng.uniform(0, 5)];
      ok = (index_valuation_check(g, p).status !=
            IndexValuationReport::Status::violated);
    }
    c.ok = ok;
    out.push_back(c);
  }
  {
    Check c{"square flags on a quartic with small group"};
    SymPair pair = expand(IntPoly{-2, 0, 1}, 2);  // expands to x^4 + 1
    c.ok = (g1_flag(pair) && !g2_flag(pair));
    out.push_back(c);
  }
}

void run_groups_suite(std::vector<Check>& out) {
  {
    Check c{"overgroup class counts for small ranks"};
    c.ok = (overgroup_census(1).size() == 2 && overgroup_census(2).size() == 4 &&
            overgroup_census(3).size() == 6 && overgroup_census(4).size() == 7);
    out.push_back(c);
  }
  {
    Check c{"order profile of the rank 3 classes"};
    std::vector<long> orders;
    for (const auto& cls : overgroup_census(3)) orders.push_back(cls.order);
    std::sort(orders.begin(), orders.end());
    c.ok = (orders == std::vector<long>{6, 6, 12, 24, 24, 48});
    out.push_back(c);
  }
  {
    Check c{"one-cocycle class counts"};
    bool ok = true;
    for (int n = 2; n <= 4; ++n)
      ok = ok && cocycle_count(n, CoeffModule::mod_diagonal_perp).h1 == 2;
    ok = ok && cocycle_count(3, CoeffModule::full).h1 == 2;
    ok = ok && cocycle_count(3, CoeffModule::mod_diagonal).h1 == 1;
    c.ok = ok;
    out.push_back(c);
  }
  {
    Check c{"tiny census box tallies"};
    CensusRecord rec = run_census(2, 0, false);
    c.ok = (rec.tallies.total == 1 && rec.tallies.inseparable == 1);
    out.push_back(c);
  }
  {
    Check c{"square-product box counts"};
    c.ok = (count_xyz_square(1) == 1 && count_xyz_square(2) == 2 &&
            count_xyz_square(4) == 6 &&
            count_xyz_square(300) == count_xyz_square_brute(300));
    out.push_back(c);
  }
}

void run_fourier_suite(std::vector<Check>& out) {
  {
    Check c{"plain transform leading term"};
    SplittingType sigma = SplittingType::of({{1, 1}, {1, 1}});
    TransformCheck chk = transform_check(3, 2, sigma, false, false);
    c.ok = (chk.envelope_constant <= 4.0 && chk.zero_value > 0);
    out.push_back(c);
  }
  {
    Check c{"pointed transform supported on the annihilator"};
    SplittingType sigma;
    sigma.parts = {{1, 2}, {1, 1}};
    sigma.marked = MarkAt::plus_two;
    TransformCheck chk = transform_check(5, 3, sigma, true, false);
    c.ok = (chk.support_in_subspace && chk.envelope_constant <= 4.0);
    out.push_back(c);
  }
  {
    Check c{"monic boundary case decay"};
    SplittingType sigma = SplittingType::of({{1, 2}});
    TransformCheck chk = transform_check(5, 2, sigma, false, true);
    c.ok = (chk.envelope_constant <= 4.0 &&
            std::abs(chk.off_exponent - (chk.k + 0.5)) < 1e-9);
    out.push_back(c);
  }
  {
    Check c{"lattice splitting scale identity"};
    SplittingType sigma;
    sigma.parts = {{1, 2}};
    sigma.marked = MarkAt::plus_two;
    LambdaDeltaReport rep = lambda_delta_split(3, 2, sigma);
    c.ok = (rep.a_p_le_one && rep.a_hat_le_bound && rep.lattice.index == 9);
    out.push_back(c);
  }
  {
    Check c{"twisted summation matches its dual side"};
    std::vector<double> ind = {0.0, 1.0, 0.0};
    TwistedPoissonReport a =
        twisted_poisson_check(1, {{2}}, 3, ind, 1.5);
    TwistedPoissonReport b =
        twisted_poisson_check(1, {{1}}, 1, {1.0}, 1.0);
    c.ok = (a.residual <= 1e-8 && b.residual <= 1e-8);
    out.push_back(c);
  }
}

int cmd_verify(const std::string& suite) {
  std::vector<Check> checks;
  if (suite == "poly" || suite == "all") run_poly_suite(checks);
  if (suite == "disc" || suite == "all") run_disc_suite(checks);
  if (suite == "groups" || suite == "all") run_groups_suite(checks);
  if (suite == "fourier" || suite == "all") run_fourier_suite(checks);
  if (checks.empty()) throw ShapeError("unknown suite '" + suite + "'");
  int failed = 0;
  for (const Check& c : checks) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name << '\n';
    if (!c.ok) ++failed;
  }
  std::cout << (failed ? "FAILED " : "OK ") << checks.size() - failed << "/"
            << checks.size() << " checks\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for reciprocal-polynomial Galois statistics"};
  app.require_subcommand(1);

  GlobalOpts global;
  global.workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--workers", global.workers, "worker thread count")
      ->envname("RECIP_WORKERS")
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", global.seed, "run seed for reproducible reports")
      ->envname("RECIP_SEED");
  app.add_option("--budget", global.budget, "certificate prime budget")
      ->check(CLI::Range(1L, 1000000L));

  // classify
  std::string poly_text;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "flag report for one palindromic polynomial");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--poly", poly_text, "ascending coefficient list, e.g. 1,3,1")
      ->required();

  // census
  int census_n = 1;
  long census_H = 0;
  bool census_monic = false;
  std::string census_out, census_checkpoint, census_format = "json";
  CLI::App* census_cmd = app.add_subcommand("census", "exhaustive box census");
  census_cmd->fallthrough();
  census_cmd->add_option("--n", census_n, "half degree")->required()->check(CLI::Range(1, 16));
  census_cmd->add_option("--H", census_H, "coefficient height bound")->required()
      ->check(CLI::Range(0L, 1000000000L));
  census_cmd->add_flag("--monic", census_monic, "pin the top trace coefficient to 1");
  census_cmd->add_option("--out", census_out, "output file (default stdout)");
  census_cmd->add_option("--checkpoint", census_checkpoint, "checkpoint/resume file");
  census_cmd->add_option("--format", census_format, "json or csv");

  // xyz
  long xyz_H = 0;
  CLI::App* xyz_cmd = app.add_subcommand("xyz", "count |x|,|y|,|z| <= H with xy = z^2");
  xyz_cmd->fallthrough();
  xyz_cmd->add_option("--H", xyz_H, "box height")->required()->check(CLI::Range(1L, 100000000L));

  // fourier
  std::uint64_t fourier_p = 3;
  int fourier_n = 2;
  std::string fourier_sigma, fourier_pointed;
  bool fourier_monic = false;
  CLI::App* fourier_cmd =
      app.add_subcommand("fourier", "transform decay report for one factor shape");
  fourier_cmd->fallthrough();
  fourier_cmd->add_option("--p", fourier_p, "prime modulus")->required();
  fourier_cmd->add_option("--n", fourier_n, "ambient degree")->required()->check(CLI::Range(1, 16));
  fourier_cmd->add_option("--sigma", fourier_sigma, "factor shape, e.g. 1^2,1")->required();
  fourier_cmd->add_option("--pointed", fourier_pointed, "mark the first cluster at +2 or -2");
  fourier_cmd->add_flag("--monic", fourier_monic, "monic model instead of the projective one");

  // groups
  int groups_n = 2;
  bool groups_gens = false;
  CLI::App* groups_cmd =
      app.add_subcommand("groups", "conjugacy classes of overgroups surjecting onto S_n");
  groups_cmd->fallthrough();
  groups_cmd->add_option("--n", groups_n, "rank")->required()->check(CLI::Range(1, 6));
  groups_cmd->add_flag("--all-overgroups", groups_gens, "include generator lists");

  // verify
  std::string verify_suite = "all";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the built-in self checks");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", verify_suite, "poly, disc, groups, fourier, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(global, poly_text);
    if (census_cmd->parsed())
      return cmd_census(global, census_n, census_H, census_monic, census_out,
                        census_checkpoint, census_format);
    if (xyz_cmd->parsed()) return cmd_xyz(xyz_H);
    if (fourier_cmd->parsed())
      return cmd_fourier(fourier_p, fourier_n, fourier_sigma, fourier_pointed,
                         fourier_monic);
    if (groups_cmd->parsed()) return cmd_groups(groups_n, groups_gens);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite);
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
