#pragma once

#include "strata/subsystem.hpp"
#include "strata/weyl.hpp"

namespace strata {

/* A pseudo-Levi subgroup G_Pi attached to an independent subset of the
   extended base.  Node 0 is the lowest root; node i (1 <= i <= rank) is
   alpha_i. */
struct PseudoLevi {
  std::vector<int> nodes;  // sorted extended-base node numbers
  RootSet pi_roots;        // base root indices
  RootSet roots;           // Phi_Pi
  std::vector<Component> components;
  RationalSubspace center;          // V_Pi
  std::vector<Int> component_group;  // invariant factors of Z(M)/Z(M)°
  bool is_levi_flag = false;
};

PseudoLevi make_pseudo_levi(const RootSystem& rs, std::vector<int> nodes);

/* One representative per W-conjugacy class of independent subsets of the
   extended base (the lexicographically smallest node set), ordered by
   (size, nodes).  One orbit walk per class. */
std::vector<PseudoLevi> enumerate_pseudo_levis(
    const RootSystem& rs, std::size_t bfs_cap = kDefaultOrbitCap);

/* True iff the subsystem is a Levi subsystem (W-conjugate to one generated
   by a subset of the plain base); equivalently, closed under rational
   spans.  The set must be closed. */
bool is_levi_subsystem(const RootSystem& rs, const RootSet& roots);

/* Invariant factors (> 1) of the finite group
   {x : alpha(x) in Z for alpha in Pi} / (V_Pi + Q^vee). */
std::vector<Int> center_component_group(const RootSystem& rs,
                                        const RootSet& pi_base);

/* Does the coset x_s + V_Pi + Q^vee have connected centralizer exactly
   G_Pi at its generic points?  Throws when x_s is not centralized by
   G_Pi. */
bool coset_admissible(const RootSystem& rs, const PseudoLevi& pl,
                      const RatVec& x_s);

/* Complete invariant of the coset x_s + V_Pi + Q^vee (deterministic). */
RatVec coset_canonical_key(const RootSystem& rs, const RootSet& pi_base,
                           const RatVec& x_s);

/* Representatives of all torsion cosets x + V_Pi + Q^vee with
   alpha(x) in Z for alpha in Pi; finite, deterministic order. */
std::vector<RatVec> coset_reps(const RootSystem& rs, const PseudoLevi& pl);

/* Full-rank Pi only: the admissible points modulo Q^vee (the isolated
   semisimple classes with centralizer G_Pi). */
std::vector<RatVec> isolated_cosets(const RootSystem& rs,
                                    const PseudoLevi& pl);

std::string show_pseudo_levi(const RootSystem& rs, const PseudoLevi& pl);

}  // namespace strata
