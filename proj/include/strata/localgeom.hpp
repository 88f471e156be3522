#pragma once

#include "strata/stratify.hpp"

namespace strata {

/* One branch of the local model at a point rv: a class datum of the
   centralizer subgroup of the semisimple part, written inside its root
   subsystem.  witness_word moves the defining triple onto the branch. */
struct LocalBranch {
  RootSet levi_base;               // base of w(Phi_Pi') inside Phi_Pi_r
  RatVec x;                        // canonical key of the coset w.x_s
  std::vector<OrbitLabel> labels;  // transported, in decompose() order
  Word witness_word;
};

struct LocalModel {
  RatVec x_r;
  RootSet pi_r;  // base of the integral subsystem of x_r
  int count = 0;
  std::vector<LocalBranch> branches;
};

// Elements fixing the defining coset x_s + V_Pi' + Q^vee setwise.
std::vector<Perm> stab_coset(const StratifyCtx& ctx, const JordanTriple& t);

// Elements of stab_coset fixing the orbit label tuple as well.
std::vector<Perm> w_stab_tau(const StratifyCtx& ctx, const JordanTriple& t);

// All w with x_r in w(x_s + V_Pi') + Q^vee.
std::vector<Perm> w_tau_r(const StratifyCtx& ctx, const JordanTriple& t,
                          const RatVec& x_r);

// Members of w_tau_r whose induced orbit tuple on the integral subsystem of
// p.x_r dominates the unipotent labels of p, componentwise.
std::vector<Perm> w_tau_rv(const StratifyCtx& ctx, const JordanTriple& t,
                           const GroupPoint& p);

// Double coset counts |W_r \ mid / W_tau| with mid = w_tau_r, resp.
// w_tau_rv; zero when the middle set is empty.
int local_branch_count_semisimple(const StratifyCtx& ctx,
                                  const JordanTriple& t, const RatVec& x_r);
int local_branch_count(const StratifyCtx& ctx, const JordanTriple& t,
                       const GroupPoint& p);

// The branch list at p: one transported triple per double coset class.
LocalModel local_model(const StratifyCtx& ctx, const JordanTriple& t,
                       const GroupPoint& p);

// Unibranch test for the adjoint quotient of the class closure at [x_r].
// Requires the coset stabilizer to fix the whole triple; otherwise the
// criterion does not apply and the call throws.
bool quotient_unibranch_at(const StratifyCtx& ctx, const JordanTriple& t,
                           const RatVec& x_r);

// Restrict the setwise stabilizer of V_Pi' inside W(Phi_Pi_r) to V_Pi';
// true iff the restricted matrix group is generated by its
// pseudo-reflections.  Both arguments may be given by any generating set.
bool reflection_group_test(const RootSystem& rs, const RootSet& pi_r_roots,
                           const RootSet& pi_prime_roots,
                           std::size_t cap = kDefaultGroupCap);

// Whether the semisimple quotient attached to Pi is normal in codimension
// one, for every admissible coset.  Each codim-1 stratum of the quotient is
// checked twice: the transverse curve must be smooth (wall group identifies
// the transverse direction with its negative) and the stratum must be
// unibranch (the coset translates through it form a single orbit under the
// wall group).  Works in every type; orbit walks only, no group table.
bool codim1_normal(const RootSystem& rs, const PseudoLevi& pl,
                   std::size_t cap = kDefaultOrbitCap);

struct SmoothWitness {
  GroupPoint point;
  std::string class_key;
  int count = 0;
};

/* Verdict for a sheet of a classical group: smooth iff every isolated point
   of the regular closure has branch count one. */
struct SmoothReport {
  bool smooth = true;
  std::size_t isolated_checked = 0;
  std::vector<SmoothWitness> witnesses;  // points with count != 1
};

SmoothReport sheet_smooth_classical(const StratifyCtx& ctx,
                                    const JordanTriple& t);

/* Lie-algebra class datum modelling the closure near unipotent points. */
struct LieModel {
  RootSet levi_base;
  std::string levi_name;
  std::vector<OrbitLabel> orbits;
};

LieModel unipotent_lie_model(const RootSystem& rs, const JordanTriple& t);

}  // namespace strata
