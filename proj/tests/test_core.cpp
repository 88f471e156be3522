#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/rootsystem.hpp"

using namespace strata;

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rat("-2/3") == Rat(-2, 3));
  CHECK(parse_rat("5") == Rat(5));
  CHECK(show_rat(parse_rat("4/6")) == "2/3");
  CHECK(show_rat(Rat(-7)) == "-7");
  RatVec v = parse_rat_vec("1/3,0,-2/3");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == 0);
  CHECK(show_rat_vec(v) == "1/3,0,-2/3");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("floor_div handles negatives exactly") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(-8, 2) == -4);
}

TEST_CASE("vector arithmetic") {
  RatVec a{Rat(1), Rat(2)}, b{Rat(1, 2), Rat(-2)};
  CHECK(dot(a, b) == Rat(-7, 2));
  CHECK(is_zero(a + (Rat(-1) * a)));
  CHECK((a - b)[0] == Rat(1, 2));
}

TEST_CASE("determinant and rank") {
  IntMat m(3, 3);
  m[0] = {2, -1, 0};
  m[1] = {-1, 2, -1};
  m[2] = {0, -1, 2};  // Cartan A3
  CHECK(det(m) == 4);
  CHECK(rank(to_rat(m)) == 3);
  IntMat sing(2, 2);
  sing[0] = {1, 2};
  sing[1] = {2, 4};
  CHECK(det(sing) == 0);
  CHECK(rank(to_rat(sing)) == 1);
}

TEST_CASE("solve and kernel") {
  RatMat A(2, 3);
  A[0] = {Rat(1), Rat(1), Rat(0)};
  A[1] = {Rat(0), Rat(1), Rat(1)};
  auto x = solve(A, {Rat(3), Rat(5)});
  REQUIRE(x.has_value());
  CHECK(mul(A, *x) == RatVec{Rat(3), Rat(5)});
  auto K = kernel_basis(A);
  REQUIRE(K.size() == 1);
  CHECK(is_zero(mul(A, K[0])));

  RatMat B(2, 1);
  B[0] = {Rat(1)};
  B[1] = {Rat(1)};
  CHECK_FALSE(solve(B, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("smith normal form divisibility") {
  IntMat m(2, 2);
  m[0] = {2, 4};
  m[1] = {6, 8};
  auto s = smith_normal_form(m);
  CHECK(s.D[0][0] == 2);
  CHECK(s.D[1][1] == 4);  // det 8 = 2*4, 2 | 4
  CHECK(mul(mul(s.U, m), s.V) == s.D);
  CHECK((det(s.U) == 1 || det(s.U) == -1));
  CHECK((det(s.V) == 1 || det(s.V) == -1));
}

TEST_CASE("lattice membership and reduction") {
  IntMat g(2, 2);
  g[0] = {2, 0};
  g[1] = {0, 3};
  IntegerLattice L{g};
  CHECK(L.contains({Rat(4), Rat(-3)}));
  CHECK_FALSE(L.contains({Rat(1), Rat(0)}));
  CHECK_FALSE(L.contains({Rat(1, 2), Rat(0)}));
  RatVec r = reduce_mod_lattice({Rat(5), Rat(-1)}, L);
  CHECK(L.contains(RatVec{Rat(5), Rat(-1)} - r));
  CHECK(reduce_mod_lattice(r, L) == r);  // idempotent
}

TEST_CASE("subspace plus lattice cosets") {
  // V = line through (1,1), L = Z^2
  auto V = RationalSubspace::span(2, {{Rat(1), Rat(1)}});
  CHECK(V.dim() == 1);
  CHECK(V.contains({Rat(-3, 2), Rat(-3, 2)}));
  IntegerLattice Z2{IntMat::identity(2)};
  CHECK(lattice_coset_membership({Rat(5, 2), Rat(3, 2)}, V, Z2));
  CHECK_FALSE(lattice_coset_membership({Rat(1, 2), Rat(1, 3)}, V, Z2));
  auto ann = V.annihilator();
  REQUIRE(ann.size() == 1);
  CHECK(dot(ann[0], {Rat(1), Rat(1)}) == 0);
}

TEST_CASE("parse_type validates") {
  CHECK(parse_type("E7").rank == 7);
  CHECK(parse_type("A1").family == 'A');
  CHECK_THROWS(parse_type("D3"));
  CHECK_THROWS(parse_type("E9"));
  CHECK_THROWS(parse_type("H4"));
  CHECK(show_type({'F', 4}) == "F4");
}

static int root_count(const char* t) {
  return build_root_system(parse_type(t)).nroots();
}

TEST_CASE("root counts") {
  CHECK(root_count("A1") == 2);
  CHECK(root_count("A3") == 12);
  CHECK(root_count("B2") == 8);
  CHECK(root_count("B3") == 18);
  CHECK(root_count("C3") == 18);
  CHECK(root_count("D4") == 24);
  CHECK(root_count("G2") == 12);
  CHECK(root_count("F4") == 48);
  CHECK(root_count("E6") == 72);
  CHECK(root_count("E7") == 126);
}

TEST_CASE("root system invariants") {
  for (const char* name : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = build_root_system(parse_type(name));
    CAPTURE(name);
    // negation pairing and positivity split
    for (int i = 0; i < rs.nroots(); ++i) {
      CHECK(rs.neg[rs.neg[i]] == i);
      CHECK(rs.is_positive(i) != rs.is_positive(rs.neg[i]));
      CHECK(rs.index_of(rs.roots[i]) == i);
    }
    // simple roots are where they claim to be
    for (int i = 0; i < rs.rank; ++i) {
      const IntVec& c = rs.roots[rs.simple_idx[i]];
      for (int j = 0; j < rs.rank; ++j) CHECK(c[j] == (i == j ? 1 : 0));
      CHECK(rs.ext_base[i + 1] == rs.simple_idx[i]);
    }
    // Cartan integers recovered from the form
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(rs.pairing(rs.simple_idx[j], rs.simple_idx[i]) ==
              rs.cartan[j][i]);
    // highest root has maximal height
    Int hh = 0, best = 0;
    for (const auto& r : rs.roots) {
      Int h = 0;
      for (const auto& c : r) h += c;
      if (h > best) best = h;
    }
    for (const auto& c : rs.roots[rs.highest]) hh += c;
    CHECK(hh == best);
    CHECK(rs.ext_base[0] == rs.neg[rs.highest]);
  }
}

TEST_CASE("lengths in the nonsimply laced types") {
  auto g2 = build_root_system(parse_type("G2"));
  CHECK(g2.cartan[1][0] == -3);  // alpha1 short
  CHECK_FALSE(g2.is_long(g2.simple_idx[0]));
  CHECK(g2.is_long(g2.simple_idx[1]));
  CHECK(g2.len2(g2.simple_idx[1]) == 3 * g2.len2(g2.simple_idx[0]));

  auto f4 = build_root_system(parse_type("F4"));
  CHECK(f4.is_long(f4.simple_idx[0]));
  CHECK(f4.is_long(f4.simple_idx[1]));
  CHECK_FALSE(f4.is_long(f4.simple_idx[2]));
  CHECK_FALSE(f4.is_long(f4.simple_idx[3]));
  int nlong = 0;
  for (int i = 0; i < f4.nroots(); ++i) nlong += f4.is_long(i);
  CHECK(nlong == 24);

  auto c3 = build_root_system(parse_type("C3"));
  CHECK(c3.is_long(c3.simple_idx[2]));
  CHECK(c3.is_long(c3.highest));
}

TEST_CASE("evaluation pairs roots with coweights") {
  auto rs = build_root_system(parse_type("A3"));
  // x = half the third fundamental coweight
  RatVec x{Rat(0), Rat(0), Rat(1, 2)};
  CHECK(rs.eval(rs.simple_idx[2], x) == Rat(1, 2));
  CHECK(rs.eval(rs.simple_idx[0], x) == 0);
  CHECK(rs.eval(rs.highest, x) == Rat(1, 2));
  CHECK_THROWS_WITH((void)rs.eval(rs.highest, RatVec{Rat(0)}),
                    "eval: dim mismatch");
}

TEST_CASE("coroot coordinates match the pairing") {
  for (const char* name : {"A2", "B2", "G2", "D4"}) {
    auto rs = build_root_system(parse_type(name));
    CAPTURE(name);
    for (int a = 0; a < rs.nroots(); ++a) {
      // coweight coordinates of root_a^vee are cartan * coroot[a]
      RatVec cw(rs.rank, Rat(0));
      for (int k = 0; k < rs.rank; ++k)
        for (int i = 0; i < rs.rank; ++i)
          cw[k] += Rat(rs.cartan[k][i] * rs.coroot[a][i]);
      for (int b = 0; b < rs.nroots(); ++b)
        CHECK(rs.pairing(b, a) == dot(to_rat(rs.roots[b]), cw));
    }
  }
  // index of Q^vee in the coweight lattice = |Z(G)| = det of Cartan
  auto a3 = build_root_system(parse_type("A3"));
  CHECK(det(a3.cartan) == 4);
  CHECK_FALSE(a3.coroot_lattice().contains({Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("center subspace") {
  auto rs = build_root_system(parse_type("A3"));
  auto V = rs.center_subspace({rs.simple_idx[0]});
  CHECK(V.dim() == 2);
  for (const auto& b : V.basis) CHECK(rs.eval(rs.simple_idx[0], b) == 0);
  CHECK(rs.center_subspace({}).dim() == 3);
  CHECK(rs.center_subspace({rs.simple_idx[0], rs.simple_idx[1],
                            rs.simple_idx[2]})
            .dim() == 0);
}

TEST_CASE("reflections permute roots") {
  auto rs = build_root_system(parse_type("B2"));
  for (int a = 0; a < rs.nroots(); ++a)
    for (int b = 0; b < rs.nroots(); ++b) {
      int c = rs.reflect_root(a, b);
      CHECK(rs.reflect_root(a, c) == b);
      CHECK(rs.len2(c) == rs.len2(b));
    }
  // s_alpha(alpha) = -alpha
  CHECK(rs.reflect_root(rs.simple_idx[0], rs.simple_idx[0]) ==
        rs.neg[rs.simple_idx[0]]);
}
