#include "recip/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "recip/errors.hpp"
#include "recip/intfactor.hpp"
#include "recip/intpoly.hpp"
#include "recip/reciprocal.hpp"

namespace recip {

CensusTallies& CensusTallies::operator+=(const CensusTallies& o) {
  total += o.total;
  inseparable += o.inseparable;
  reducible_f += o.reducible_f;
  g1 += o.g1;
  g2 += o.g2;
  g3 += o.g3;
  gg_not_sn += o.gg_not_sn;
  sn_undetermined += o.sn_undetermined;
  return *this;
}

bool CensusTallies::operator==(const CensusTallies& o) const {
  return total == o.total && inseparable == o.inseparable && reducible_f == o.reducible_f &&
         g1 == o.g1 && g2 == o.g2 && g3 == o.g3 && gg_not_sn == o.gg_not_sn &&
         sn_undetermined == o.sn_undetermined;
}

namespace {

constexpr std::uint64_t kShardSize = 100'000;

CensusTallies census_shard(int n, long H, bool monic, const ClassifyBudgets& budgets,
                           std::uint64_t begin, std::uint64_t end) {
  CensusTallies t;
  std::uint64_t base = 2 * static_cast<std::uint64_t>(H) + 1;
  int free_coeffs = monic ? n : n + 1;
  std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
  for (std::uint64_t item = begin; item < end; ++item) {
    ++t.total;
    std::uint64_t v = item;
    for (int jc = 0; jc < free_coeffs; ++jc) {
      coeffs[static_cast<size_t>(jc)] = static_cast<long>(v % base) - H;
      v /= base;
    }
    if (monic) coeffs[static_cast<size_t>(n)] = 1;
    IntPoly g{std::vector<mpz_class>(coeffs)};
    if (g.degree() != n) {
      ++t.inseparable;
      continue;
    }
    SymPair pair = expand(g, n);
    bool in_g1 = false;
    try {
      in_g1 = g1_flag(pair);
    } catch (const SeparabilityError&) {
      ++t.inseparable;
      continue;
    }
    bool in_g2 = g2_flag(pair);
    if (reducibility_flag(pair.f)) ++t.reducible_f;

    CertStatus cert;
    if (n == 1) {
      cert = CertStatus::certified;  // the trivial group is the full one
    } else if (n == 2) {
      cert = is_square_int(discriminant(g)) ? CertStatus::refuted : CertStatus::certified;
    } else {
      cert = sn_certificate(g, budgets.cert_primes);
    }
    if (cert == CertStatus::certified) {
      if (in_g1) ++t.g1;
      if (in_g2) ++t.g2;
      if (n % 2 == 1 && g3_flag(pair, budgets.g3_lift_limit) == TriFlag::yes) ++t.g3;
    } else {
      ++t.gg_not_sn;
      if (cert == CertStatus::undetermined) ++t.sn_undetermined;
    }
  }
  return t;
}

nlohmann::json tallies_to_json(const CensusTallies& t) {
  return nlohmann::json{{"total", t.total},
                        {"inseparable", t.inseparable},
                        {"reducible_f", t.reducible_f},
                        {"g1", t.g1},
                        {"g2", t.g2},
                        {"g3", t.g3},
                        {"gg_not_sn", t.gg_not_sn},
                        {"sn_undetermined", t.sn_undetermined}};
}

CensusTallies tallies_from_json(const nlohmann::json& j) {
  CensusTallies t;
  t.total = j.at("total").get<std::uint64_t>();
  t.inseparable = j.at("inseparable").get<std::uint64_t>();
  t.reducible_f = j.at("reducible_f").get<std::uint64_t>();
  t.g1 = j.at("g1").get<std::uint64_t>();
  t.g2 = j.at("g2").get<std::uint64_t>();
  t.g3 = j.at("g3").get<std::uint64_t>();
  t.gg_not_sn = j.at("gg_not_sn").get<std::uint64_t>();
  t.sn_undetermined = j.at("sn_undetermined").get<std::uint64_t>();
  return t;
}

}  // namespace

CensusRecord run_census(int n, long H, bool monic, const CensusOptions& options) {
  if (n < 1) throw ShapeError("census needs n >= 1");
  if (H < 0) throw ShapeError("census needs H >= 0");
  int workers = std::max(options.workers, 1);

  std::uint64_t base = 2 * static_cast<std::uint64_t>(H) + 1;
  int free_coeffs = monic ? n : n + 1;
  std::uint64_t box = 1;
  for (int i = 0; i < free_coeffs; ++i) {
    if (box > 1'000'000'000ULL / base + 1) throw ResourceError("enumeration budget of 10^9 exceeded");
    box *= base;
  }
  if (box > 1'000'000'000ULL) throw ResourceError("enumeration budget of 10^9 exceeded");

  std::uint64_t nshards = (box + kShardSize - 1) / kShardSize;
  std::uint64_t resume_shard = 0;
  CensusTallies folded;

  if (!options.checkpoint_path.empty()) {
    std::ifstream in(options.checkpoint_path);
    if (in.good()) {
      nlohmann::json j = nlohmann::json::parse(in);
      bool matches = j.value("schema", "") == "recip/v1" && j.value("kind", "") == "census_checkpoint" &&
                     j.value("n", -1) == n && j.value("H", -1L) == H &&
                     j.value("monic", !monic) == monic &&
                     j.value("seed", options.seed + 1) == options.seed;
      if (!matches) throw DomainError("checkpoint does not match the requested census");
      resume_shard = j.at("next_shard").get<std::uint64_t>();
      folded = tallies_from_json(j.at("tallies"));
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t batch = static_cast<std::uint64_t>(workers) * 4;
  for (std::uint64_t shard0 = resume_shard; shard0 < nshards; shard0 += batch) {
    std::uint64_t shard1 = std::min(shard0 + batch, nshards);
    std::vector<CensusTallies> results(static_cast<size_t>(shard1 - shard0));
    std::atomic<std::uint64_t> next{shard0};
    auto work = [&]() {
      while (true) {
        std::uint64_t s = next.fetch_add(1);
        if (s >= shard1) break;
        std::uint64_t lo = s * kShardSize;
        std::uint64_t hi = std::min(lo + kShardSize, box);
        results[static_cast<size_t>(s - shard0)] =
            census_shard(n, H, monic, options.budgets, lo, hi);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (std::thread& th : pool) th.join();
    }
    for (const CensusTallies& r : results) folded += r;
    if (!options.checkpoint_path.empty()) {
      nlohmann::json j{{"schema", "recip/v1"}, {"kind", "census_checkpoint"}, {"n", n},
                       {"H", H},               {"monic", monic},             {"seed", options.seed},
                       {"next_shard", shard1}, {"tallies", tallies_to_json(folded)}};
      std::ofstream out(options.checkpoint_path, std::ios::trunc);
      out << j.dump(2) << "\n";
    }
  }
  auto t1 = std::chrono::steady_clock::now();

  CensusRecord rec;
  rec.n = n;
  rec.H = H;
  rec.monic = monic;
  rec.seed = options.seed;
  rec.worker_count = workers;
  rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  rec.tallies = folded;
  return rec;
}

std::uint64_t count_xyz_square_brute(std::uint64_t H) {
  if (H < 1) throw ShapeError("count needs H >= 1");
  if (H > 2000) throw ResourceError("brute-force counter capped at H = 2000");
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; x <= H; ++x) {
    for (std::uint64_t y = 1; y <= H; ++y) {
      std::uint64_t pr = x * y;
      std::uint64_t z = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(pr))));
      while (z * z > pr) --z;
      while ((z + 1) * (z + 1) <= pr) ++z;
      if (z * z == pr && z >= 1 && z <= H) ++count;
    }
  }
  return count;
}

std::uint64_t count_xyz_square(std::uint64_t H) {
  if (H < 1) throw ShapeError("count needs H >= 1");
  if (H > 100'000'000ULL) throw ResourceError("counter capped at H = 10^8");
  // x = k u^2, y = k v^2, z = k u v with gcd(u, v) = 1 biject with solutions;
  // for each k both u and v range in [1, sqrt(H/k)]
  std::uint64_t mmax = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(H)));
  while (mmax * mmax > H) --mmax;
  while ((mmax + 1) * (mmax + 1) <= H) ++mmax;
  // totient sieve up to mmax, then coprime-pair counts
  std::vector<std::uint64_t> phi(mmax + 1);
  for (std::uint64_t i = 0; i <= mmax; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i <= mmax; ++i) {
    if (phi[i] == i) {  // prime
      for (std::uint64_t m = i; m <= mmax; m += i) phi[m] -= phi[m] / i;
    }
  }
  std::vector<std::uint64_t> pairs(mmax + 1, 0);  // coprime pairs in [1,m]^2
  for (std::uint64_t m = 1; m <= mmax; ++m) pairs[m] = pairs[m - 1] + 2 * phi[m];
  for (std::uint64_t m = 1; m <= mmax; ++m) pairs[m] -= 1;  // (1,1) counted once overall
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= H; ++k) {
    std::uint64_t q = H / k;
    std::uint64_t m = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)));
    while (m * m > q) --m;
    while ((m + 1) * (m + 1) <= q) ++m;
    total += pairs[m];
  }
  return total;
}

FitReport fit_asymptotic(const std::vector<std::pair<long, std::uint64_t>>& samples, double a,
                         double b) {
  if (samples.size() < 3) throw ShapeError("a growth fit needs at least 3 samples");
  for (size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first <= samples[i - 1].first)
      throw ShapeError("samples must have strictly increasing H");
  FitReport out;
  out.a = a;
  out.b = b;
  for (const auto& [H, count] : samples) {
    if (H < 2 && b != 0) throw ShapeError("log-scaled fits need H >= 2");
    if (count == 0) {
      ++out.excluded_zeros;
      continue;
    }
    double scale = std::pow(static_cast<double>(H), a);
    if (b != 0) scale *= std::pow(std::log(static_cast<double>(H)), b);
    out.values.emplace_back(H, static_cast<double>(count) / scale);
  }
  if (out.values.empty()) throw DomainError("all samples had zero counts");
  out.c_low = out.values.front().second;
  out.c_high = out.values.front().second;
  for (const auto& [H, c] : out.values) {
    out.c_low = std::min(out.c_low, c);
    out.c_high = std::max(out.c_high, c);
  }
  out.ratio = out.c_high / out.c_low;
  return out;
}

}  // namespace recip
