#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "strata/json_io.hpp"

using namespace strata;

/* Reports promise byte stability: building the same tables twice from
   scratch must yield identical strings. */

TEST_CASE("class tables are byte-stable across context rebuilds") {
  auto rs1 = build_root_system(parse_type("A2"));
  auto ctx1 = make_stratify_ctx(rs1);
  auto cls1 = enumerate_jordan_classes(ctx1);
  auto rs2 = build_root_system(parse_type("A2"));
  auto ctx2 = make_stratify_ctx(rs2);
  auto cls2 = enumerate_jordan_classes(ctx2);

  CHECK(classes_tsv(ctx1, cls1) == classes_tsv(ctx2, cls2));
  CHECK(classes_text(ctx1, cls1) == classes_text(ctx2, cls2));
  CHECK(closure_matrix_tsv(ctx1, cls1, false) ==
        closure_matrix_tsv(ctx2, cls2, false));

  json j1 = json::array(), j2 = json::array();
  for (const auto& t : cls1) j1.push_back(jordan_triple_json(ctx1, t));
  for (const auto& t : cls2) j2.push_back(jordan_triple_json(ctx2, t));
  CHECK(j1.dump(2) == j2.dump(2));
}

TEST_CASE("tsv table shape") {
  auto rs = build_root_system(parse_type("A1"));
  auto ctx = make_stratify_ctx(rs);
  auto cls = enumerate_jordan_classes(ctx);
  auto tsv = classes_tsv(ctx, cls);
  std::stringstream ss(tsv);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "key\ttype\tnodes\tcoset\torbits\tdim\tsheet");
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '\t') == 6);
  }
  CHECK(rows == (int)cls.size());
  // the text rendering has one line per class and marks the sheets
  auto text = classes_text(ctx, cls);
  CHECK(std::count(text.begin(), text.end(), '\n') == (int)cls.size());
  int marked = 0;
  std::stringstream ts(text);
  while (std::getline(ts, line)) marked += line.ends_with("[sheet]");
  CHECK(marked == 3);
}

TEST_CASE("closure matrix diagonal and header") {
  auto rs = build_root_system(parse_type("A2"));
  auto ctx = make_stratify_ctx(rs);
  auto cls = enumerate_jordan_classes(ctx);
  auto tsv = closure_matrix_tsv(ctx, cls, false);
  std::stringstream ss(tsv);
  std::string header;
  REQUIRE(std::getline(ss, header));
  // header carries one key per class
  CHECK(std::count(header.begin(), header.end(), '\t') == (int)cls.size());
  int row = 0;
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string cell;
    std::getline(ls, cell, '\t');
    CHECK(cell == triple_key(ctx, cls[row]));
    int col = 0;
    while (std::getline(ls, cell, '\t')) {
      CHECK((cell == "0" || cell == "1"));
      if (col == row) CHECK(cell == "1");  // reflexive
      ++col;
    }
    CHECK(col == (int)cls.size());
    ++row;
  }
  CHECK(row == (int)cls.size());
}

TEST_CASE("triple json carries the class data") {
  auto rs = build_root_system(parse_type("A3"));
  auto ctx = make_stratify_ctx(rs);
  RatVec zero(3, Rat(0));
  auto t = make_jordan_triple(rs, make_pseudo_levi(rs, {1}), zero,
                              {OrbitLabel{{'A', 1}, {2}, VeTag::none}});
  auto j = jordan_triple_json(ctx, t);
  CHECK(j.contains("key"));
  CHECK(j["type"] == "A1");
  CHECK(j["nodes"] == json::array({1}));
  CHECK(j["orbits"] == json::array({"A1:[2]"}));
  CHECK(j["dim"] == class_dim(rs, t));
  CHECK(j["sheet"] == is_sheet(t));
  CHECK(j.contains("coset"));
  CHECK(j["levi"] == true);
}

TEST_CASE("pseudo levi json lists components and center") {
  auto rs = build_root_system(parse_type("F4"));
  auto pl = make_pseudo_levi(rs, {0, 1, 2});
  auto j = pseudo_levi_json(rs, pl);
  CHECK(j["nodes"] == json::array({0, 1, 2}));
  CHECK(j["type"] == "A3");
  CHECK(j["levi"] == false);
  CHECK(j["component_group"] == json::array({"2"}));
  REQUIRE(j.contains("base"));
  CHECK(j["base"].size() == 3);
}

TEST_CASE("group point and local model json") {
  auto rs = build_root_system(parse_type("A3"));
  auto ctx = make_stratify_ctx(rs);
  RatVec xr{Rat(0), Rat(1, 2), Rat(0)};
  auto p = make_group_point(
      rs, xr,
      {OrbitLabel{{'A', 1}, {1, 1}, VeTag::none},
       OrbitLabel{{'A', 1}, {2}, VeTag::none}});
  auto pj = group_point_json(rs, p);
  CHECK(pj["x"] == "0,1/2,0");
  CHECK(pj["unipotent"] == json::array({"A1:[1,1]", "A1:[2]"}));

  auto t = make_jordan_triple(rs, make_pseudo_levi(rs, {1}),
                              RatVec(3, Rat(0)),
                              {OrbitLabel{{'A', 1}, {1, 1}, VeTag::none}});
  auto lm = local_model(ctx, t, p);
  auto mj = local_model_json(ctx, lm);
  CHECK(mj["count"] == 1);
  REQUIRE(mj["branches"].is_array());
  CHECK(mj["branches"].size() == 1);
  CHECK(mj["witnesses"].size() == 1);
  // two independent computations serialize identically
  auto mj2 = local_model_json(ctx, local_model(ctx, t, p));
  CHECK(mj.dump() == mj2.dump());
}

TEST_CASE("stratum and smooth report json") {
  auto rs = build_root_system(parse_type("A2"));
  auto ctx = make_stratify_ctx(rs);
  auto strata = sln_strata(ctx);
  REQUIRE(!strata.empty());
  auto sj = stratum_json(ctx, strata.front());
  CHECK(sj["sheets"].size() == strata.front().sheets.size());
  CHECK(sj["translates_disjoint_or_equal"] == true);

  auto t = make_jordan_triple(rs, make_pseudo_levi(rs, {1}),
                              RatVec(2, Rat(0)),
                              {OrbitLabel{{'A', 1}, {1, 1}, VeTag::none}});
  auto rep = sheet_smooth_classical(ctx, t);
  auto rj = smooth_report_json(rs, rep);
  CHECK(rj["smooth"] == rep.smooth);
  CHECK(rj["isolated_checked"] == rep.isolated_checked);
  CHECK(rj["witnesses"].is_array());
}

TEST_CASE("root coordinate block") {
  auto rs = build_root_system(parse_type("A2"));
  auto j = root_coords_json(rs, {rs.simple_idx[0], rs.highest});
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0] == "1,0");
  CHECK(j[1] == "1,1");
}
