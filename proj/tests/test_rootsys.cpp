#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "alcoved/rootsys.hpp"

using namespace alcoved;

namespace {

struct Classical {
  Family family;
  int rank;
  size_t positive;
  long coxeter;
  IntVector marks;
};

std::vector<Classical> classical_table() {
  std::vector<Classical> t;
  for (int n = 1; n <= 8; ++n) t.push_back({Family::A, n, size_t(n * (n + 1) / 2), n + 1, IntVector(n, 1)});
  for (int n = 2; n <= 8; ++n) {
    IntVector b(n, 2), c(n, 2);
    b[0] = 1;
    c[n - 1] = 1;
    t.push_back({Family::B, n, size_t(n * n), 2L * n, b});
    t.push_back({Family::C, n, size_t(n * n), 2L * n, c});
  }
  for (int n = 4; n <= 8; ++n) {
    IntVector d(n, 2);
    d[0] = d[n - 2] = d[n - 1] = 1;
    t.push_back({Family::D, n, size_t(n * (n - 1)), 2L * n - 2, d});
  }
  t.push_back({Family::E, 6, 36, 12, {1, 2, 2, 3, 2, 1}});
  t.push_back({Family::E, 7, 63, 18, {2, 2, 3, 4, 3, 2, 1}});
  t.push_back({Family::E, 8, 120, 30, {2, 3, 4, 6, 5, 4, 3, 2}});
  t.push_back({Family::F, 4, 24, 12, {2, 3, 4, 2}});
  t.push_back({Family::G, 2, 6, 6, {3, 2}});
  return t;
}

Point pt(std::initializer_list<const char*> xs) {
  Point p;
  for (auto x : xs) p.push_back(parse_rational(x));
  return p;
}

size_t find_root(const RootSystemData& rs, const IntVector& c) {
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    if (rs.positive_roots[i].c == c) return i;
  }
  FAIL("no root with those coefficients");
  return 0;
}

}  // namespace

TEST_CASE("G2 has six positive roots and denominator exponents 1, 2, 3") {
  auto rs = build_root_system(Family::G, 2);
  CHECK(rs.positive_roots.size() == 6);
  IntVector ell = rs.ell;
  std::sort(ell.begin(), ell.end());
  CHECK(ell == IntVector{1, 2, 3});
  CHECK(rs.ell[0] == 1);
  CHECK(rs.cartan == std::vector<IntVector>{{2, -1}, {-3, 2}});
}

TEST_CASE("B3 marks and denominators") {
  auto rs = build_root_system(Family::B, 3);
  CHECK(rs.marks == IntVector{1, 2, 2});
  CHECK(rs.ell == IntVector{1, 1, 2, 2});
  CHECK(rs.h_dual == 6);
}

TEST_CASE("A4 has ten positive roots, all marks one") {
  auto rs = build_root_system(Family::A, 4);
  CHECK(rs.positive_roots.size() == 10);
  CHECK(rs.marks == IntVector(4, 1));
  CHECK(rs.ell == IntVector(5, 1));
}

TEST_CASE("B2 Cartan matrix follows (alpha_i, alpha_j^vee)") {
  auto rs = build_root_system(Family::B, 2);
  CHECK(rs.cartan == std::vector<IntVector>{{2, -2}, {-1, 2}});
}

TEST_CASE("classical counts, marks and Coxeter numbers for every type up to rank 8") {
  for (const auto& row : classical_table()) {
    auto rs = build_root_system(row.family, row.rank);
    CAPTURE(rs.name());
    CHECK(rs.positive_roots.size() == row.positive);
    CHECK(rs.marks == row.marks);
    CHECK(rs.h_dual == row.coxeter);
    CHECK(rs.theta().c == rs.marks);
    CHECK(rs.theta().height + 1 == row.coxeter);
  }
}

TEST_CASE("root data invariants") {
  for (const auto& row : classical_table()) {
    auto rs = build_root_system(row.family, row.rank);
    CAPTURE(rs.name());
    const long top = rs.theta().height;
    std::set<IntVector> all;
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
      const auto& r = rs.positive_roots[i];
      CHECK(dot(r.c, r.d) == 2);
      CHECK(r.height == std::accumulate(r.c.begin(), r.c.end(), 0L));
      if (i != rs.theta_index) CHECK(r.height < top);
      if (i > 0) CHECK(rs.positive_roots[i - 1].height <= r.height);
      all.insert(r.c);
    }
    CHECK(all.size() == rs.positive_roots.size());
    CHECK(rs.theta_index == rs.positive_roots.size() - 1);
    for (int i = 0; i < rs.rank; ++i) {
      IntVector e(rs.rank, 0);
      e[i] = 1;
      CHECK(rs.positive_roots[rs.simple_index(i)].c == e);
    }
    // Closed under simple reflections up to sign.
    for (const auto& r : rs.positive_roots) {
      for (int i = 0; i < rs.rank; ++i) {
        long pairing = 0;
        for (int j = 0; j < rs.rank; ++j) pairing += r.c[j] * rs.cartan[j][i];
        IntVector s = r.c;
        s[i] -= pairing;
        bool negative = std::all_of(s.begin(), s.end(), [](long x) { return x <= 0; });
        if (negative) {
          for (auto& x : s) x = -x;
        }
        CHECK(all.count(s) == 1);
      }
    }
  }
}

TEST_CASE("eval_form examples") {
  auto b2 = build_root_system(Family::B, 2);
  const auto& theta = b2.theta();
  CHECK(theta.c == IntVector{1, 2});
  CHECK(eval_form(theta, pt({"0", "0"})) == 0);
  CHECK(eval_form(theta, pt({"0", "1/2"})) == 1);

  auto b3 = build_root_system(Family::B, 3);
  Point x = to_omega_coords(Family::B, 3, pt({"3/2", "1/2", "1/2"}));
  CHECK(x == pt({"1", "0", "1/2"}));
  CHECK(eval_form(b3.positive_roots[find_root(b3, {1, 2, 2})], x) == 2);
}

TEST_CASE("reflect examples") {
  auto b2 = build_root_system(Family::B, 2);
  const auto& a2 = b2.positive_roots[1];
  CHECK(a2.c == IntVector{0, 1});
  CHECK(a2.d == IntVector{-2, 2});
  CHECK(reflect(pt({"-1", "1"}), a2, 0) == pt({"1", "-1"}));
  // Points on the hyperplane are fixed.
  CHECK(reflect(pt({"3", "1/2"}), b2.theta(), 4) == pt({"3", "1/2"}));
}

TEST_CASE("reflection is an involution and preserves the coweight lattice") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (auto fam : {Family::A, Family::B, Family::C, Family::G}) {
    int rank = fam == Family::G ? 2 : 3;
    auto rs = build_root_system(fam, rank);
    for (const auto& r : rs.positive_roots) {
      for (int trial = 0; trial < 20; ++trial) {
        long level = num(rng) % 4;
        Point p, z;
        for (int i = 0; i < rank; ++i) {
          p.push_back(Rational(num(rng), den(rng)));
          p.back().canonicalize();
          z.push_back(num(rng));
        }
        CHECK(reflect(reflect(p, r, level), r, level) == p);
        Point img = reflect(z, r, level);
        CHECK(std::all_of(img.begin(), img.end(), [](const Rational& x) { return is_integer(x); }));
      }
    }
  }
}

TEST_CASE("to_omega_coords examples") {
  CHECK(to_omega_coords(Family::B, 3, pt({"1/2", "1/2", "1/2"})) == pt({"0", "0", "1/2"}));
  CHECK(to_omega_coords(Family::B, 2, pt({"1", "0"})) == pt({"1", "0"}));
  CHECK(to_omega_coords(Family::G, 2, pt({"1/2", "0", "-1/2"})) == pt({"0", "1/2"}));
  CHECK(to_omega_coords(Family::G, 2, pt({"2/3", "-1/3", "-1/3"})) == pt({"1/3", "0"}));
  CHECK(to_omega_coords(Family::A, 3, pt({"1", "1", "0", "0"})) == pt({"0", "1", "0"}));
  CHECK(to_omega_coords(Family::D, 4, pt({"1", "0", "0", "0"})) == pt({"1", "0", "0", "0"}));
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 4}, {Family::C, 3},
                                                              {Family::D, 5}, {Family::G, 2}}) {
    Point origin(euclidean_dimension(fam, rank), Rational(0));
    CHECK(to_omega_coords(fam, rank, origin) == Point(rank, Rational(0)));
  }
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(build_root_system(Family::D, 3), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::E, 9), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::G, 3), DomainError);
  CHECK_THROWS_AS(parse_family("X"), InputError);
  CHECK(parse_family("B") == Family::B);
  CHECK(parse_family("G") == Family::G);
  CHECK(build_root_system(Family::F, 4).name() == "F4");
}
