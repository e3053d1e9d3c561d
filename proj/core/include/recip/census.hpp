#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "recip/classify.hpp"

namespace recip {

struct CensusTallies {
  std::uint64_t total = 0;
  std::uint64_t inseparable = 0;  // degenerate or repeated-root items
  std::uint64_t reducible_f = 0;  // separable items whose expansion splits over Q
  std::uint64_t g1 = 0;           // flag tallies among certified full-symmetric items
  std::uint64_t g2 = 0;
  std::uint64_t g3 = 0;
  std::uint64_t gg_not_sn = 0;        // certificate refuted or undetermined
  std::uint64_t sn_undetermined = 0;  // the undetermined subset of gg_not_sn

  CensusTallies& operator+=(const CensusTallies& o);
  bool operator==(const CensusTallies& o) const;
};

struct CensusRecord {
  int n = 0;
  long H = 0;
  bool monic = false;
  std::uint64_t seed = 0;
  int worker_count = 1;
  double wall_seconds = 0;
  CensusTallies tallies;
};

struct CensusOptions {
  int workers = 1;
  std::uint64_t seed = 0;
  ClassifyBudgets budgets;
  std::string checkpoint_path;  // empty disables checkpoint/resume
};

// Enumerates every trace polynomial with coefficients in [-H, H] (the leading
// coefficient pinned to 1 in monic mode), classifies each item, and folds the
// tallies shard by shard in a fixed order so the record is identical for any
// worker count.  Box size is capped at 10^9 items.
CensusRecord run_census(int n, long H, bool monic, const CensusOptions& options = CensusOptions{});

// Exact number of triples 1 <= x, y, z <= H with x*y = z^2, via the
// parametrization x = k u^2, y = k v^2, z = k u v over coprime (u, v).
std::uint64_t count_xyz_square(std::uint64_t H);
// Quadratic-time reference counter for small H.
std::uint64_t count_xyz_square_brute(std::uint64_t H);

// Scales each sample count by H^a log^b H and reports the spread of the
// resulting constants; a tight ratio supports a growth-rate claim.
struct FitReport {
  double a = 0;
  double b = 0;
  std::vector<std::pair<long, double>> values;  // (H, scaled constant)
  double c_low = 0;
  double c_high = 0;
  double ratio = 0;  // c_high / c_low
  int excluded_zeros = 0;
};
FitReport fit_asymptotic(const std::vector<std::pair<long, std::uint64_t>>& samples, double a,
                         double b);

}  // namespace recip
