#pragma once

#include "strata/fixtures.hpp"
#include "strata/localgeom.hpp"

namespace strata {

/* One frozen-fixture verification.  status is "pass", "fail", or
   "skipped(cap)"; the last is reserved for cap exhaustion and is distinct
   from failure. */
struct CheckResult {
  std::string fixture;
  std::string status;
  std::string detail;

  bool failed() const { return status == "fail"; }
};

/* codim1_normal over every class of independent subsets with
   1 <= |Pi| < rank, diffed up to W-conjugacy against the frozen table. */
CheckResult check_codim1_table(const CartanType& t,
                               std::size_t cap = kDefaultOrbitCap);

/* The A3 local-count example: semisimple count 2, refined count 1. */
CheckResult check_local_counts(std::size_t weyl_cap = kDefaultGroupCap);

/* Every sheet of SL_n passes the smoothness test and every stratum's
   central translates are pairwise disjoint or equal. */
CheckResult check_sln(int n, std::size_t weyl_cap = kDefaultGroupCap);

}  // namespace strata
