#pragma once

#include "strata/rootsystem.hpp"

namespace strata {

/* Root sets are sorted vectors of root indices, closed under negation. */
using RootSet = std::vector<int>;

/* Smallest subsystem containing the seeds: closed under negation and under
   addition of roots (the root system of the subgroup generated by the seed
   root subgroups). */
RootSet closure_subsystem(const RootSystem& rs, const RootSet& seed);

/* Phi intersected with the Q-span of the seed (the Levi hull). */
RootSet rational_span_subsystem(const RootSystem& rs, const RootSet& seed);

RootSet positive_part(const RootSystem& rs, const RootSet& s);

/* Indecomposable positive elements: the canonical base of a closed subsystem. */
RootSet base_of(const RootSystem& rs, const RootSet& s);

struct Component {
  std::vector<int> nodes;  // base root indices, ordered like the standard simple roots
  CartanType ctype;
  bool short_marked = false;  // all roots short inside a two-length ambient
  RootSet roots;              // the component's full subsystem

  std::string name() const;  // "A3", "Ã1", ...
};

/* Decompose a closed subsystem into irreducible components, each with its
   base ordered to match cartan_matrix(ctype).  Components are sorted by
   their root sets, so the order is canonical. */
std::vector<Component> decompose(const RootSystem& rs, const RootSet& s);

/* Multiset type key and display name ("D4+2A1") of a component list. */
using TypeKey = std::vector<std::pair<CartanType, bool>>;  // sorted
TypeKey type_key(const std::vector<Component>& comps);
std::string type_name(const std::vector<Component>& comps);

/* Coordinates of each component root in the standard epsilon model of its
   type (dimension rank+1 for A, rank otherwise).  Used to recognize Levi
   shapes inside classical components. */
struct EpsModel {
  CartanType ct;
  int dim = 0;
  std::map<int, IntVec> eps;  // ambient root index -> epsilon vector
};
EpsModel eps_model(const RootSystem& rs, const Component& comp);

/* Express a subsystem root as an integer combination of base roots. */
IntVec base_coordinates(const RootSystem& rs, const std::vector<int>& base, int root);

}  // namespace strata
