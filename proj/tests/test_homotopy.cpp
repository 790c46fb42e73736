#include "wbary/combinatorics.hpp"
#include "wbary/error.hpp"
#include "wbary/euler.hpp"
#include "wbary/homotopy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace wbary {
namespace {

ValidatedInstance make(std::int64_t chi, std::vector<Rational> weights, Rational rho) {
  return validate(ProblemInstance{chi, std::move(weights), std::move(rho), {}});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no wbary::Error thrown";
  return ErrorCode::ParseError;
}

std::uint64_t mask(std::initializer_list<int> one_based) {
  std::uint64_t m = 0;
  for (int i : one_based) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::vector<Rational> tenths() {
  std::vector<Rational> out;
  for (int k = 1; k <= 10; ++k) out.emplace_back(k, 10);
  return out;
}

std::vector<Rational> quarter_rhos() {
  std::vector<Rational> out;
  for (int k = 1; k <= 24; ++k) out.emplace_back(k, 4);
  return out;
}

TEST(SpaceExpr, ChiAndText) {
  const auto x = base("X", 3);
  EXPECT_EQ(chi_of(x), 3);
  EXPECT_EQ(chi_of(circle()), 0);
  EXPECT_EQ(chi_of(point()), 1);
  EXPECT_EQ(chi_of(wedge({x, circle()})), 2);
  EXPECT_EQ(chi_of(wedge({x, circle(), circle()})), 1);
  EXPECT_EQ(chi_of(disjoint_union({x, base("A2", -4)})), -1);
  EXPECT_EQ(to_string(wedge({x, circle()})), "X v S1");
  const auto mixed = disjoint_union({wedge({base("A1", 1), circle()}), base("A2", 2)});
  EXPECT_EQ(to_string(mixed), "A1 v S1 | A2");
  EXPECT_EQ(chi_of(mixed), 2);
  EXPECT_EQ(to_string(wedge({mixed, point()})), "(A1 v S1 | A2) v pt");
}

TEST(Descriptor, ChiRules) {
  EXPECT_EQ(chi_of_descriptor(contractible()), 1);
  const auto b = bary(2, wedge({base("X", 3), circle()}));
  EXPECT_EQ(chi_of_descriptor(b), 1 - ext_binomial(0, 2));
  EXPECT_EQ(chi_of_descriptor(b), 1);
  EXPECT_EQ(chi_of_descriptor(suspension(b)), 1);
  EXPECT_EQ(chi_of_descriptor(bary(0, base("X", 5))), 0);
  EXPECT_EQ(chi_of_descriptor(bary(1, base("X", 5))), 5);
  EXPECT_EQ(to_string(suspension(b)), "susp(B_2(X v S1))");
  EXPECT_EQ(to_string(contractible()), "contractible");
  EXPECT_EQ(suspension(b), suspension(bary(2, wedge({base("X", 3), circle()}))));
  EXPECT_FALSE(suspension(b) == b);
}

TEST(Colimit, WorkedDecomposition) {
  const auto v = make(2, {Rational(3, 10), Rational(2, 5), Rational(3, 5)}, Rational(9, 2));
  const auto pieces = maximal_pieces(v);
  const std::set<ConicPiece> got(pieces.begin(), pieces.end());
  const std::set<ConicPiece> expected{{4, mask({1})}, {4, mask({2})}, {3, mask({1, 2, 3})}};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(pieces.size(), 3u);
  EXPECT_EQ(to_string(ConicPiece{4, mask({1})}), "B_4(X,p1)");
  EXPECT_EQ(to_string(ConicPiece{3, mask({1, 2, 3})}), "B_3(X,p1,p2,p3)");

  const auto all = colimit_pieces(v);
  EXPECT_EQ(all.size(), 8u);
  for (const auto& p : expected) EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
}

TEST(Colimit, SmallCases) {
  EXPECT_EQ(colimit_pieces(make(1, {}, Rational(5, 2))), (std::vector<ConicPiece>{{2, 0}}));
  EXPECT_EQ(maximal_pieces(make(1, {}, Rational(5, 2))), (std::vector<ConicPiece>{{2, 0}}));
  const auto v = make(1, {Rational(1, 2)}, Rational(1));
  EXPECT_EQ(colimit_pieces(v), (std::vector<ConicPiece>{{1, 0}, {0, 1}}));
  EXPECT_EQ(maximal_pieces(v), (std::vector<ConicPiece>{{1, 0}}));
  EXPECT_EQ(code_of([] { colimit_pieces(make(1, {Rational(1)}, Rational(2))); }), ErrorCode::WeightOutOfRange);
}

TEST(Colimit, Inclusion) {
  const ConicPiece big{3, mask({1, 2, 3})};
  EXPECT_FALSE(piece_includes(big, {4, mask({1})}));
  EXPECT_TRUE(piece_includes(big, big));
  EXPECT_TRUE(piece_includes({0, mask({1})}, {1, 0}));
  EXPECT_TRUE(piece_includes({2, mask({1})}, {3, mask({2})}));
  EXPECT_FALSE(piece_includes({2, mask({1, 3})}, {3, mask({2})}));
  EXPECT_FALSE(piece_includes({1, 0}, {0, mask({1})}));
}

TEST(Colimit, MaximalitySoundness) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> r_dist(0, 5), num(1, 19), rho_num(1, 80);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> w;
    const int r = r_dist(rng);
    for (int i = 0; i < r; ++i) w.emplace_back(num(rng), 20);
    const auto v = make(1, w, Rational(rho_num(rng), 10));
    const auto all = colimit_pieces(v);
    const auto top = maximal_pieces(v);
    for (const auto& p : all) {
      EXPECT_TRUE(std::any_of(top.begin(), top.end(), [&](const ConicPiece& m) { return piece_includes(p, m); }));
      EXPECT_TRUE(piece_includes(p, p));
      for (const auto& q : all) {
        if (!piece_includes(p, q)) continue;
        for (const auto& s : all) {
          if (piece_includes(q, s)) EXPECT_TRUE(piece_includes(p, s));
        }
      }
    }
    for (const auto& a : top) {
      for (const auto& b : top) {
        if (!(a == b)) EXPECT_FALSE(piece_includes(a, b)) << to_string(a) << " " << to_string(b);
      }
    }
  }
}

TEST(ClassifyR1, Examples) {
  for (std::int64_t chi = -3; chi <= 3; ++chi) {
    EXPECT_EQ(classify_r1(make(chi, {Rational(7, 10)}, Rational(5, 2))), bary(2, base("X", chi)));
    EXPECT_EQ(classify_r1(make(chi, {Rational(3, 10)}, Rational(5, 2))), contractible());
  }
  const auto unit = classify_r1(make(4, {Rational(1)}, Rational(1)));
  EXPECT_EQ(unit, bary(1, base("X", 4)));
  EXPECT_EQ(chi_of_descriptor(unit), 4);
  EXPECT_EQ(code_of([] { classify_r1(make(2, {Rational(3, 2)}, Rational(2))); }), ErrorCode::OutOfScope);
  EXPECT_EQ(code_of([] { classify_r1(make(2, {}, Rational(2))); }), ErrorCode::OutOfScope);
}

TEST(ClassifyR2, ConnectedCases) {
  EXPECT_EQ(to_string(classify_r2_connected(make(3, {Rational(3, 10), Rational(2, 5)}, Rational(5, 2)))),
            "susp(B_2(X v S1))");
  EXPECT_EQ(to_string(classify_r2_connected(make(3, {Rational(3, 5), Rational(7, 10)}, Rational(5, 2)))),
            "B_2(X v S1)");
  EXPECT_EQ(to_string(classify_r2_connected(make(3, {Rational(4, 5), Rational(9, 10)}, Rational(5, 2)))), "B_2(X)");
  EXPECT_EQ(classify_r2_connected(make(3, {Rational(1, 10), Rational(1, 5)}, Rational(5, 2))), contractible());
  EXPECT_EQ(classify_r2_connected(make(3, {Rational(1, 5), Rational(9, 10)}, Rational(5, 2))), contractible());
  EXPECT_EQ(code_of([] { classify_r2_connected(make(3, {Rational(1, 5), Rational(6, 5)}, Rational(5, 2))); }),
            ErrorCode::OutOfScope);
}

TEST(ClassifyR2, TwoComponentForms) {
  const auto both_small = make(3, {Rational(3, 10), Rational(2, 5)}, Rational(5, 2));
  EXPECT_EQ(to_string(classify_r2_two_components(both_small, Placement::OneEach, 1, 2)), "susp(B_2(A1 v A2))");
  EXPECT_EQ(to_string(classify_r2_two_components(both_small, Placement::BothInFirst, 1, 2)),
            "susp(B_2(A1 v S1 | A2))");
  const auto heavy = make(3, {Rational(4, 5), Rational(9, 10)}, Rational(5, 2));
  EXPECT_EQ(classify_r2_two_components(heavy, Placement::OneEach, 1, 2),
            classify_r2_two_components(heavy, Placement::BothInFirst, 1, 2));
  EXPECT_EQ(to_string(classify_r2_two_components(heavy, Placement::OneEach, 1, 2)), "B_2(A1 | A2)");
  EXPECT_EQ(code_of([&] { classify_r2_two_components(heavy, Placement::OneEach, 1, 1); }),
            ErrorCode::InconsistentComponents);
}

TEST(ClassifyR1, MatchesEngine) {
  for (std::int64_t chi = -5; chi <= 5; ++chi) {
    for (const auto& w : tenths()) {
      for (const auto& rho : quarter_rhos()) {
        const auto v = make(chi, {w}, rho);
        ASSERT_TRUE(topological_chi_applicable(v));
        EXPECT_EQ(chi_of_descriptor(classify_r1(v)), chi_c_direct(v).chi_c)
            << chi << " " << to_string(w) << " " << to_string(rho);
      }
    }
  }
}

TEST(ClassifyR2, ConnectedMatchesEngine) {
  const auto ws = tenths();
  for (std::int64_t chi = -4; chi <= 4; ++chi) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i; j < ws.size(); ++j) {
        for (const auto& rho : quarter_rhos()) {
          const auto v = make(chi, {ws[i], ws[j]}, rho);
          EXPECT_EQ(chi_of_descriptor(classify_r2_connected(v)), chi_c_direct(v).chi_c)
              << chi << " " << to_string(ws[i]) << "," << to_string(ws[j]) << " " << to_string(rho);
        }
      }
    }
  }
}

TEST(ClassifyR2, TwoComponentsMatchEngineAndEachOther) {
  const auto ws = tenths();
  for (std::int64_t a1 = -3; a1 <= 3; ++a1) {
    for (std::int64_t a2 = -3; a2 <= 3; ++a2) {
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i; j < ws.size(); j += 2) {
          for (const auto& rho : quarter_rhos()) {
            const auto v = make(a1 + a2, {ws[i], ws[j]}, rho);
            const BigInt one_each = chi_of_descriptor(classify_r2_two_components(v, Placement::OneEach, a1, a2));
            const BigInt both = chi_of_descriptor(classify_r2_two_components(v, Placement::BothInFirst, a1, a2));
            EXPECT_EQ(one_each, both);
            EXPECT_EQ(one_each, chi_c_direct(v).chi_c);
          }
        }
      }
    }
  }
}

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(chi_disjoint_union_decomposition(1, 1, 2), 1);
  for (std::int64_t n = -4; n <= 4; ++n) {
    const BigInt b2 = 1 - ext_binomial(2 - n, 2);
    EXPECT_EQ(chi_disjoint_union_decomposition(n, 1, 2), b2 + (2 - n) - 1);
  }
  for (std::int64_t c1 = -4; c1 <= 4; ++c1) {
    for (std::int64_t c2 = -4; c2 <= 4; ++c2) {
      const BigInt b2a = 1 - ext_binomial(2 - c1, 2);
      const BigInt b2b = 1 - ext_binomial(2 - c2, 2);
      EXPECT_EQ(chi_disjoint_union_decomposition(c1, c2, 2), b2a + (2 - c1 * c2) + b2b - 2);
    }
  }
  EXPECT_EQ(code_of([] { chi_disjoint_union_decomposition(1, 1, 1); }), ErrorCode::OutOfScope);
}

TEST(DisjointUnion, MatchesClosedForm) {
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      for (std::int64_t k = 2; k <= 10; ++k) {
        EXPECT_EQ(chi_disjoint_union_decomposition(a, b, k), 1 - ext_binomial(k - a - b, k)) << a << " " << b << " " << k;
      }
    }
  }
}

}  // namespace
}  // namespace wbary
