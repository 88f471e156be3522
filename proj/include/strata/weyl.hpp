#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "strata/rootsystem.hpp"
#include "strata/subsystem.hpp"

namespace strata {

// A Weyl group element, stored as the permutation it induces on root indices.
using Perm = std::vector<std::uint16_t>;
// A word in the generators of an enumerated group (generator positions).
using Word = std::vector<std::uint8_t>;

inline constexpr std::size_t kDefaultGroupCap = 10000000;
inline constexpr std::size_t kDefaultOrbitCap = 5000000;

Perm perm_identity(int nroots);
Perm perm_compose(const Perm& a, const Perm& b);  // apply b, then a
Perm perm_inverse(const Perm& a);

// Permutation of all roots induced by the reflection at root a.
Perm reflection_perm(const RootSystem& rs, int a);

// Sorted image of a set of root indices.
RootSet apply_perm(const Perm& w, const RootSet& s);

// Sorted set of positive representatives of s (deduplicated).
RootSet positive_key(const RootSystem& rs, const RootSet& s);

// Action on a point of the coweight space, in fundamental coweight
// coordinates: (w.x)_i = <w^{-1} alpha_i, x>.
RatVec coweight_action(const RootSystem& rs, const Perm& w, const RatVec& x);

struct WeylGroupTable {
  std::vector<Perm> elems;  // ordered by (word length, lex word)
  std::vector<Word> words;
  std::vector<Perm> gens;
  std::vector<int> gen_roots;  // positive root indices, one per generator
  std::map<Perm, int> index;

  int order() const { return static_cast<int>(elems.size()); }
  int index_of(const Perm& p) const;  // -1 if absent
};

// Enumerates the group generated by the reflections at gen_roots.  Throws
// guard_error("group exceeds cap") when the element count passes cap.
WeylGroupTable enumerate_group(const RootSystem& rs, std::vector<int> gen_roots,
                               std::size_t cap = kDefaultGroupCap,
                               bool parallel = true);

WeylGroupTable full_weyl_group(const RootSystem& rs,
                               std::size_t cap = kDefaultGroupCap,
                               bool parallel = true);

// Elements of W stabilizing the given set of root indices setwise.
std::vector<Perm> setwise_stabilizer(const WeylGroupTable& W,
                                     const RootSet& roots);

// Orbit walk over W-images of a subsystem, states keyed by the sorted set of
// positive representatives.  Stops as soon as a key in targets is reached.
// Throws guard_error("orbit exceeds cap") when the state count passes cap.
struct OrbitScan {
  bool hit = false;
  RootSet hit_key;
  std::size_t orbit_size = 0;
};

OrbitScan subsystem_orbit_scan(const RootSystem& rs, const RootSet& start,
                               const std::set<RootSet>& targets,
                               std::size_t cap = kDefaultOrbitCap,
                               bool parallel = true);

// Witness w with w(a) = b as root sets, if the subsystems are W-conjugate.
std::optional<Perm> subsystem_conjugator(const RootSystem& rs,
                                         const RootSet& a, const RootSet& b,
                                         std::size_t cap = kDefaultOrbitCap);

bool subsystems_conjugate(const RootSystem& rs, const RootSet& a,
                          const RootSet& b,
                          std::size_t cap = kDefaultOrbitCap);

// Number of (left, right) double cosets meeting the given middle set.  The
// middle set must be stable under left multiplication by left_gens and right
// multiplication by right_gens; violations raise std::logic_error.
int double_coset_count(const std::vector<Perm>& mid,
                       const std::vector<Perm>& left_gens,
                       const std::vector<Perm>& right_gens);

// Smallest mid-index of each (left, right) double coset, ascending.
std::vector<std::size_t> double_coset_reps(const std::vector<Perm>& mid,
                                           const std::vector<Perm>& left_gens,
                                           const std::vector<Perm>& right_gens);

}  // namespace strata
