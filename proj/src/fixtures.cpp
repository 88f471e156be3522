#include "strata/fixtures.hpp"

#include <stdexcept>

namespace strata {

namespace {

/* Affine G2: 0 - 2 = 1, alpha_1 short. */
const std::vector<NodeSetEntry> kG2 = {
    {"Ã1", {1}},
};

/* Affine F4: 0 - 1 - 2 => 3 - 4, alpha_3 and alpha_4 short. */
const std::vector<NodeSetEntry> kF4 = {
    {"A3", {0, 1, 2}},       {"B2+A1", {0, 2, 3}}, {"2A1+Ã1", {0, 2, 4}},
    {"B3", {1, 2, 3}},       {"C3", {2, 3, 4}},    {"2A1", {0, 2}},
    {"Ã2", {3, 4}},          {"B2", {2, 3}},
};

/* Affine E6: chain 1 - 3 - 4 - 5 - 6, node 2 on 4, node 0 on 2. */
const std::vector<NodeSetEntry> kE6 = {
    {"A5", {1, 3, 4, 5, 6}},
    {"D4", {2, 3, 4, 5}},
    {"4A1", {0, 1, 4, 6}},
    {"2A2", {1, 3, 5, 6}},
};

/* Affine E7: chain 0 - 1 - 3 - 4 - 5 - 6 - 7, node 2 on 4.  The two A5 and
   the two 3A1 representatives are pairwise conjugate under the flip of the
   affine diagram, so the table holds twelve distinct classes. */
const std::vector<NodeSetEntry> kE7 = {
    {"E6", {1, 2, 3, 4, 5, 6}},
    {"D6", {2, 3, 4, 5, 6, 7}},
    {"D4+2A1", {0, 2, 3, 4, 5, 7}},
    {"3A2", {0, 1, 2, 4, 6, 7}},
    {"2A3", {0, 1, 3, 5, 6, 7}},
    {"A3+3A1", {0, 1, 2, 3, 5, 7}},
    {"D4+A1", {0, 2, 3, 4, 5}},
    {"5A1", {0, 2, 3, 5, 7}},
    {"A5", {0, 1, 2, 3, 4}},
    {"A5", {2, 4, 5, 6, 7}},
    {"D4", {2, 3, 4, 5}},
    {"3A1", {0, 2, 3}},
    {"3A1", {2, 5, 7}},
    {"4A1", {0, 3, 5, 7}},
};

/* Affine E8: chain 1 - 3 - 4 - 5 - 6 - 7 - 8 - 0, node 2 on 4. */
const std::vector<NodeSetEntry> kE8 = {
    {"A7", {0, 2, 4, 5, 6, 7, 8}},
    {"2A3", {0, 2, 4, 5, 7, 8}},
    {"A2+4A1", {0, 1, 2, 3, 5, 7}},
    {"4A1", {0, 2, 5, 7}},
    {"D7", {2, 3, 4, 5, 6, 7, 8}},
    {"E7", {1, 2, 3, 4, 5, 6, 7}},
    {"D6+A1", {0, 2, 3, 4, 5, 6, 7}},
    {"2A3+A1", {0, 1, 2, 4, 5, 7, 8}},
    {"3A2+A1", {0, 1, 2, 3, 5, 6, 8}},
    {"D5+2A1", {0, 1, 2, 3, 4, 5, 7}},
    {"D4+A3", {0, 2, 3, 4, 5, 7, 8}},
    {"D6", {2, 3, 4, 5, 6, 7}},
    {"E6", {1, 2, 3, 4, 5, 6}},
    {"D4+2A1", {0, 2, 3, 4, 5, 7}},
    {"3A2", {0, 1, 3, 5, 6, 8}},
    {"D4", {2, 3, 4, 5}},
};

}  // namespace

const std::vector<NodeSetEntry>& codim1_expected(const CartanType& t) {
  if (t.family == 'G' && t.rank == 2) return kG2;
  if (t.family == 'F' && t.rank == 4) return kF4;
  if (t.family == 'E' && t.rank == 6) return kE6;
  if (t.family == 'E' && t.rank == 7) return kE7;
  if (t.family == 'E' && t.rank == 8) return kE8;
  throw std::invalid_argument("no frozen codim-1 table for " + show_type(t));
}

bool codim1_expected_available(const CartanType& t) {
  return (t.family == 'G' && t.rank == 2) || (t.family == 'F' && t.rank == 4) ||
         (t.family == 'E' && t.rank >= 6 && t.rank <= 8);
}

const LocalCountExample& local_count_example() {
  static const LocalCountExample ex = {
      {1},
      RatVec(3, Rat(0)),
      "A1:[1,1]",
      {Rat(0), Rat(1, 2), Rat(0)},
      {"A1:[1,1]", "A1:[2]"},
      2,
      1,
  };
  return ex;
}

}  // namespace strata
