#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/rootsystem.hpp"

namespace strata {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_sum(const Partition& p);
bool is_partition(const Partition& p);
Partition transpose_partition(const Partition& p);

// Dominance order; both arguments must have equal sums.
bool dominance_leq(const Partition& a, const Partition& b);

// Required total of an orbit partition for the given classical type.
int orbit_partition_total(CartanType ct);

// A_n: any partition of n+1.  B_n: 2n+1, even parts with even multiplicity.
// C_n: 2n, odd parts with even multiplicity.  D_n: 2n, even parts with even
// multiplicity.
bool orbit_partition_valid(CartanType ct, const Partition& p);

// Dominance-greatest valid partition (same total) below p.  family: B/C/D.
Partition collapse(char family, Partition p);

bool very_even(CartanType ct, const Partition& p);

enum class VeTag { none, I, II };

struct OrbitLabel {
  CartanType ct;
  Partition partition;
  VeTag tag = VeTag::none;

  bool operator==(const OrbitLabel&) const = default;
  auto operator<=>(const OrbitLabel&) const = default;
};

void validate_orbit_label(const OrbitLabel& o);  // throws std::invalid_argument

long long orbit_dimension(const OrbitLabel& o);

// All partitions of n (plain integer partitions, descending lex order).
std::vector<Partition> partitions_of(int n);

std::vector<Partition> valid_partitions(CartanType ct);
std::vector<OrbitLabel> all_orbit_labels(CartanType ct);  // very even split I/II

// Levi subalgebra shape of a classical ambient: gl blocks plus an optional
// same-family classical tail (so/sp factor).
struct LeviShape {
  std::vector<int> gl_blocks;
  std::optional<CartanType> tail;
};

bool shape_fits(const LeviShape& shape, CartanType ambient);
long long shape_dimension(const LeviShape& shape, CartanType ambient);
long long ambient_dimension(CartanType ct);

// Lusztig-Spaltenstein induction to the ambient type.  gl_orbs[i] is a
// partition of gl_blocks[i]; tail_orb must be given exactly when the shape
// has a tail.  Throws guard_error("very-even ambiguity") when the induced
// partition is very even in type D (the I/II tag is not resolved here).
OrbitLabel ls_induce(const LeviShape& shape,
                     const std::vector<Partition>& gl_orbs,
                     const std::optional<OrbitLabel>& tail_orb,
                     CartanType ambient);

// Same computation without resolving a very-even tag: returns the bare
// partition (decidable even when ls_induce would throw).
Partition ls_induce_partition(const LeviShape& shape,
                              const std::vector<Partition>& gl_orbs,
                              const std::optional<OrbitLabel>& tail_orb,
                              CartanType ambient);

// Not induced from any proper Levi: standard partition criterion.
bool is_rigid(const OrbitLabel& o);

// Jordan type of the exterior square of a nilpotent matrix of Jordan type p
// (transports sl4 labels to so6 across the triality-free identification).
Partition wedge_square_jordan_type(const Partition& p);

std::string show_partition(const Partition& p);
Partition parse_partition(const std::string& s);  // "[2,2,1]"
std::string show_orbit_label(const OrbitLabel& o);
OrbitLabel parse_orbit_label(const std::string& s);  // "C2:[2,1,1]", "D4:[2,2,2,2]:I"

}  // namespace strata
