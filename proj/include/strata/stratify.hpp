#pragma once

#include "strata/orbits.hpp"
#include "strata/pseudolevi.hpp"

namespace strata {

/* A Jordan class datum: extended-base pseudo-Levi, torsion coset base point
   x_s (admissible), and one orbit label per component of Phi_Pi'. */
struct JordanTriple {
  PseudoLevi pl;
  RatVec x_s;
  std::vector<OrbitLabel> orbits;
};

/* A group element rv given by its torsion semisimple coordinate x_r and the
   unipotent labels on the components of {alpha : alpha(x_r) in Z}, in the
   canonical decompose() order of that subsystem. */
struct GroupPoint {
  RatVec x_r;
  std::vector<OrbitLabel> unipotent;
};

RootSet integral_subsystem(const RootSystem& rs, const RatVec& x);

GroupPoint make_group_point(const RootSystem& rs, const RatVec& x_r,
                            std::vector<OrbitLabel> unipotent);

JordanTriple make_jordan_triple(const RootSystem& rs, const PseudoLevi& pl,
                                const RatVec& x_s,
                                std::vector<OrbitLabel> orbits);

/* Shared tables for one ambient system: the full Weyl group, the
   extended-base subsystem keys, and the pseudo-Levi class list. */
struct StratifyCtx {
  const RootSystem* rs = nullptr;
  WeylGroupTable W;
  std::map<RootSet, std::vector<int>> base_realizations;  // key -> min node set
  std::vector<PseudoLevi> pls;
};

StratifyCtx make_stratify_ctx(const RootSystem& rs,
                              std::size_t weyl_cap = kDefaultGroupCap,
                              std::size_t bfs_cap = kDefaultOrbitCap);

/* Transport an orbit label along w from component src onto component dst
   (their subsystems must correspond under w).  Resolves very-even tags via
   the induced diagram symmetry; symmetries other than the spin swap are
   rejected. */
OrbitLabel transport_label(const RootSystem& rs, const Perm& w,
                           const Component& src, const OrbitLabel& lab,
                           const Component& dst);

/* Canonical W-orbit representative of a triple: among all w moving Pi' onto
   an extended-base subsystem, minimize (node set, coset key, label key). */
JordanTriple canonical_triple(const StratifyCtx& ctx, const JordanTriple& t);

/* Serializable total key of the canonical representative. */
std::string triple_key(const StratifyCtx& ctx, const JordanTriple& t);

/* All Jordan classes of a classical ambient type, canonicalized and sorted.
   Guarded: rank must not exceed rank_guard. */
std::vector<JordanTriple> enumerate_jordan_classes(const StratifyCtx& ctx,
                                                   int rank_guard = 5);

/* Labels induced from the Levi w(Phi_Pi') into the components of the
   integral subsystem of a point; components must be classical.  The
   partition form never throws on very-even results (the tag is dropped),
   the labeled form does. */
std::vector<Partition> induce_into_partitions(const RootSystem& rs,
                                              const Perm& w,
                                              const JordanTriple& t,
                                              const RootSet& integral,
                                              const std::vector<Component>& comps);
std::vector<OrbitLabel> induce_into(const RootSystem& rs, const Perm& w,
                                    const JordanTriple& t,
                                    const RootSet& integral,
                                    const std::vector<Component>& comps);

/* Membership of the class of p in the closure / regular closure of the
   class of t.  A witness w is returned through *witness when given. */
bool closure_contains_point(const StratifyCtx& ctx, const JordanTriple& t,
                            const GroupPoint& p, Perm* witness = nullptr);
bool regular_closure_contains(const StratifyCtx& ctx, const JordanTriple& t,
                              const GroupPoint& p, Perm* witness = nullptr);

/* Closure meets the unipotent variety: Levi pseudo-Levi, identity coset. */
bool meets_unipotent(const RootSystem& rs, const JordanTriple& t);

bool is_sheet(const JordanTriple& t);

long long class_dim(const RootSystem& rs, const JordanTriple& t);

/* A generic torsion point of the defining coset of t, labeled by t's own
   orbit tuple (its integral subsystem is exactly Phi_Pi'). */
GroupPoint generic_point_of(const StratifyCtx& ctx, const JordanTriple& t);

/* Points with semisimple full-rank centralizer lying in the regular
   closure, one per conjugacy class, with their class keys. */
struct IsolatedPoint {
  GroupPoint point;
  std::string class_key;
};
std::vector<IsolatedPoint> isolated_points_in_regular_closure(
    const StratifyCtx& ctx, const JordanTriple& t);

/* Sheets of SL_n grouped into strata by central translation.  The
   disjointness bit records that distinct translates in one stratum share no
   isolated class. */
struct Stratum {
  std::vector<JordanTriple> sheets;      // the distinct central translates
  std::vector<std::string> sheet_keys;
  bool translates_disjoint_or_equal = true;
};

std::vector<Stratum> sln_strata(const StratifyCtx& ctx, int rank_guard = 5);

std::string show_triple(const StratifyCtx& ctx, const JordanTriple& t);

}  // namespace strata
