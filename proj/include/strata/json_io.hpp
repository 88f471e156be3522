#pragma once

#include <json.hpp>

#include "strata/fixtures.hpp"
#include "strata/localgeom.hpp"

namespace strata {

/* All reports use ordered JSON and canonical library orderings, so a report
   is byte-stable for a fixed configuration. */
using json = nlohmann::ordered_json;

json root_coords_json(const RootSystem& rs, const RootSet& roots);

json pseudo_levi_json(const RootSystem& rs, const PseudoLevi& pl);

json jordan_triple_json(const StratifyCtx& ctx, const JordanTriple& t);

json group_point_json(const RootSystem& rs, const GroupPoint& p);

/* {point, centralizer_pi, count, branches, witnesses} */
json local_model_json(const StratifyCtx& ctx, const LocalModel& m);

json stratum_json(const StratifyCtx& ctx, const Stratum& s);

json smooth_report_json(const RootSystem& rs, const SmoothReport& r);

/* One row per class: key, type, nodes, coset, orbits, dim, sheet. */
std::string classes_tsv(const StratifyCtx& ctx,
                        const std::vector<JordanTriple>& classes);
std::string classes_text(const StratifyCtx& ctx,
                         const std::vector<JordanTriple>& classes);

/* Square 0/1 matrix over canonical triple keys; header row and first column
   carry the keys; cell (i, j) = class j meets the (regular) closure of
   class i. */
std::string closure_matrix_tsv(const StratifyCtx& ctx,
                               const std::vector<JordanTriple>& classes,
                               bool regular);

}  // namespace strata
