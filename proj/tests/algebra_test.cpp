// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/algebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pi2/semantics.hpp"

namespace pi2 {
namespace {

FiniteGodelAlgebra product(std::initializer_list<int> sizes) {
  std::vector<FiniteGodelAlgebra> f;
  for (int s : sizes) f.push_back(make_chain(s));
  return make_product(f);
}

// Algebras of size ≤ 12 used by the exhaustive properties.
std::vector<FiniteGodelAlgebra> small_algebras() {
  std::vector<FiniteGodelAlgebra> out;
  for (int n = 2; n <= 12; ++n) out.push_back(make_chain(n));
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; a * b <= 12; ++b) out.push_back(product({a, b}));
  }
  out.push_back(product({2, 2, 2}));
  out.push_back(product({3, 2, 2}));
  // 1 ⊕ (2×2): a fresh bottom below the four-element Boolean algebra.
  out.push_back(from_table({{"0", "r", "pr", "qr", "1"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}}));
  return out;
}

// Brute-force isomorphism test, for the table examples.
bool isomorphic(const FiniteGodelAlgebra& a, const FiniteGodelAlgebra& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto n = static_cast<Element>(a.size());
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        ok = a.leq(x, y) == b.leq(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]) &&
             perm[static_cast<std::size_t>(a.imp(x, y))] ==
                 b.imp(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(MakeChain, TwoElementBoolean) {
  const auto c = make_chain(2);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.imp(1, 0), 0);
  EXPECT_EQ(c.imp(0, 0), 1);
  EXPECT_TRUE(holds_identity(c, parse_formula("p | ~p")));
}

TEST(MakeChain, LinearImplication) {
  const auto c = make_chain(3);
  EXPECT_EQ(c.imp(2, 1), 1);
  EXPECT_EQ(c.imp(1, 2), 2);
}

TEST(MakeChain, SlashValues) {
  const auto c = make_chain(4);
  const Formula slash = parse_formula("a / b");
  EXPECT_EQ(eval_term(c, slash, {{"a", 1}, {"b", 2}}), 3);  // a < b gives top
  EXPECT_EQ(eval_term(c, slash, {{"a", 2}, {"b", 1}}), 1);  // b ≤ a gives b
}

TEST(MakeChain, RejectsTrivial) {
  EXPECT_THROW(make_chain(1), AlgebraError);
  EXPECT_THROW(make_chain(0), AlgebraError);
}

TEST(MakeProduct, Diamond) {
  const auto d = product({2, 2});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_FALSE(d.is_linear());
  EXPECT_TRUE(holds_identity(d, parse_formula("(p->q)|(q->p)")));
}

TEST(MakeProduct, ComponentwiseImplication) {
  const auto a = product({3, 2});
  const Element x = *a.find("(2,0)"), y = *a.find("(0,1)");
  EXPECT_EQ(a.label(a.imp(x, y)), "(0,1)");
  EXPECT_THROW(make_product(std::vector<FiniteGodelAlgebra>{}), AlgebraError);
}

TEST(MakeProduct, PrelinearOverAllPairs) {
  // Exhaustive over the 16 pairs of the diamond.
  const auto d = product({2, 2});
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(d.join(d.imp(a, b), d.imp(b, a)), d.top());
  }
}

TEST(FromTable, DiamondIsChain2Squared) {
  const auto d = from_table({{"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
  EXPECT_TRUE(isomorphic(d, product({2, 2})));
  EXPECT_EQ(d.label(d.imp(*d.find("a"), *d.find("b"))), "b");
}

TEST(FromTable, PentagonIsNotDistributive) {
  try {
    from_table({{"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotDistributive);
    EXPECT_EQ(e.witnesses().size(), 3u);
  }
}

TEST(FromTable, ForkedUpsetsAreNotPrelinear) {
  // Up-sets of the poset r < p, r < q, ordered by inclusion.
  try {
    from_table({{"{}", "{p}", "{q}", "{p,q}", "{p,q,r}"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotPrelinear);
    EXPECT_EQ(e.witnesses(), (std::vector<std::string>{"{p}", "{q}"}));
    EXPECT_NE(std::string(e.what()).find("{p,q}"), std::string::npos);
  }
}

TEST(FromTable, RejectsNonLatticeAndCycles) {
  // Two maximal elements: no join.
  try {
    from_table({{"0", "a", "b"}, {{0, 1}, {0, 2}}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotALattice);
  }
  try {
    from_table({{"0", "a", "1"}, {{0, 1}, {1, 0}, {1, 2}}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotAPartialOrder);
  }
  EXPECT_THROW(from_table({{"0", "1"}, {{0, 5}}}), AlgebraError);
}

TEST(EvalTerm, Examples) {
  const auto c3 = make_chain(3);
  EXPECT_EQ(eval_term(c3, parse_formula("p -> q"), {{"p", 2}, {"q", 1}}), 1);
  EXPECT_EQ(eval_term(c3, parse_formula("~~q"), {{"q", 1}}), 2);
  EXPECT_THROW(eval_term(c3, parse_formula("p -> q"), {{"p", 0}}), UnboundVariable);
}

TEST(HoldsIdentity, Examples) {
  EXPECT_TRUE(holds_identity(make_chain(4), parse_formula("(p->q)|(q->p)")));
  EXPECT_FALSE(holds_identity(make_chain(3), parse_formula("p | ~p")));
  EXPECT_TRUE(holds_identity(make_chain(2), parse_formula("p | ~p")));
  EXPECT_TRUE(holds_identity(make_chain(5), parse_formula("1")));
}

TEST(ChainBound, Examples) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(chain_bound(make_chain(n)), n);
  EXPECT_EQ(chain_bound(product({2, 2})), 2);
  EXPECT_EQ(chain_bound(product({3, 2})), 3);
  EXPECT_EQ(chain_bound(product({4, 4, 4})), 4);
}

TEST(ChainBound, ThreeElementChainInDiamondIsNotImplicationClosed) {
  const auto d = product({2, 2});
  EXPECT_EQ(d.label(d.imp(*d.find("(1,0)"), *d.find("(0,0)"))), "(0,1)");
}

TEST(CoverPreserving, Examples) {
  EXPECT_TRUE(is_cover_preserving_embedding({make_chain(5), make_chain(5), {0, 1, 2, 3, 4}}));
  EXPECT_FALSE(is_cover_preserving_embedding({make_chain(3), make_chain(4), {0, 1, 3}}));
  EXPECT_FALSE(is_cover_preserving_embedding({make_chain(2), make_chain(3), {0, 2}}));
}

TEST(CoverPreserving, Errors) {
  try {
    is_cover_preserving_embedding({make_chain(3), make_chain(4), {0, 3, 3}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotAnEmbedding);
    EXPECT_FALSE(e.witnesses().empty());
  }
  try {
    is_cover_preserving_embedding({make_chain(3), make_chain(4), {0, 2, 1}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotAnEmbedding);
  }
  try {
    is_cover_preserving_embedding({make_chain(2), product({2, 2}), {0, 3}});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraErrorKind::NotLinear);
  }
}

TEST(Properties, ResiduationLaw) {
  for (const auto& alg : small_algebras()) {
    const auto n = static_cast<Element>(alg.size());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          ASSERT_EQ(alg.leq(alg.meet(a, b), c), alg.leq(a, alg.imp(b, c))) << alg.descriptor();
        }
      }
    }
  }
}

TEST(Properties, ProductsPassTableValidation) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      const auto p = product({m, n});
      TableDescription d;
      const auto size = static_cast<Element>(p.size());
      for (Element a = 0; a < size; ++a) {
        d.elements.push_back(p.label(a));
        for (Element b = 0; b < size; ++b) {
          if (p.leq(a, b)) d.leq.emplace_back(a, b);
        }
      }
      const auto t = from_table(d);
      for (Element a = 0; a < size; ++a) {
        for (Element b = 0; b < size; ++b) {
          ASSERT_EQ(t.imp(a, b), p.imp(a, b));
          ASSERT_EQ(t.meet(a, b), p.meet(a, b));
          ASSERT_EQ(t.join(a, b), p.join(a, b));
        }
      }
    }
  }
}

TEST(Properties, ChainBoundOfProductsDominatesFactors) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; m * n <= 12; ++n) {
      EXPECT_GE(chain_bound(product({m, n})), std::max(chain_bound(make_chain(m)), chain_bound(make_chain(n))));
    }
  }
}

TEST(Properties, CoverPreservingEmbeddingExistsIffSameSize) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      bool found = false;
      // Endpoint-preserving strictly increasing maps [m] → [n].
      std::vector<int> inner(static_cast<std::size_t>(std::max(0, n - 2)));
      std::iota(inner.begin(), inner.end(), 1);
      std::vector<bool> choose(inner.size(), false);
      if (m - 2 <= static_cast<int>(inner.size())) {
        std::fill(choose.begin(), choose.begin() + (m - 2), true);
        do {
          std::vector<Element> map{0};
          for (std::size_t i = 0; i < inner.size(); ++i) {
            if (choose[i]) map.push_back(inner[i]);
          }
          map.push_back(n - 1);
          found = found || is_cover_preserving_embedding({make_chain(m), make_chain(n), map});
        } while (std::prev_permutation(choose.begin(), choose.end()));
      }
      EXPECT_EQ(found, m == n) << m << " -> " << n;
    }
  }
}

TEST(Properties, ChainBoundMatchesLambdaFailures) {
  // λk has k-1 variables, so only algebras with short chains are affordable.
  for (const auto& alg : small_algebras()) {
    if (chain_bound(alg) > 6) continue;
    int largest_failing = 1;
    for (int k = 2; k <= 6; ++k) {
      if (!holds_identity(alg, make_lambda(k))) largest_failing = k;
    }
    EXPECT_EQ(chain_bound(alg), largest_failing + 1) << alg.descriptor();
  }
}

}  // namespace
}  // namespace pi2
