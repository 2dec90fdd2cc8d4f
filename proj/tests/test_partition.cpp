#include <map>
#include <set>

#include <gtest/gtest.h>

#include "nilorb/error.hpp"
#include "nilorb/partition.hpp"
#include "oracles/oracles.hpp"

using namespace nilorb;

namespace {

Partition P(const oracle::Parts& p) { return Partition(std::vector<int>(p)); }

oracle::Parts raw(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

int as_int(Eps e) { return sign(e); }

}  // namespace

TEST(Parse, ExpandsExponents) {
  EXPECT_EQ(parse_partition("7^2,4"), (Partition{7, 7, 4}));
  EXPECT_EQ(parse_partition("3,1,1,1,1,1,1"), (Partition{3, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(parse_partition("2,5"), (Partition{5, 2}));
  EXPECT_EQ(parse_partition(" 2^6, 1,1,1,1 ").total(), 16);
  EXPECT_EQ(parse_partition("3,2^2,1^0"), (Partition{3, 2, 2}));
}

TEST(Parse, RejectsBadInput) {
  EXPECT_THROW((void)parse_partition(""), DomainError);
  EXPECT_THROW((void)parse_partition("3,x"), DomainError);
  EXPECT_THROW((void)parse_partition("3,0"), DomainError);
  EXPECT_THROW((void)parse_partition("3,-1"), DomainError);
  EXPECT_THROW((void)parse_partition("2^"), DomainError);
  EXPECT_THROW((void)parse_partition("2^-1"), DomainError);
  EXPECT_THROW((void)parse_partition("1^0"), DomainError);
}

TEST(Partition, CanonicalForm) {
  const Partition p(std::vector<int>{1, 0, 3, 3});
  EXPECT_EQ(p, (Partition{3, 3, 1}));
  EXPECT_EQ(p.total(), 7);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.to_string(), "3,3,1");
  EXPECT_THROW(Partition(std::vector<int>{2, -1}), DomainError);
}

TEST(EpsValidity, Examples) {
  EXPECT_TRUE(is_valid_eps(Partition{3, 1, 1, 1, 1, 1, 1}, Eps::Orthogonal));
  EXPECT_FALSE(is_valid_eps(Partition{3, 2}, Eps::Symplectic));
  EXPECT_TRUE(is_valid_eps(Partition{2, 2, 1, 1}, Eps::Orthogonal));
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(dual(Partition{1, 1, 1}), (Partition{3}));
  EXPECT_EQ(dual(Partition{5, 5, 4}), (Partition{3, 3, 3, 3, 2}));
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(Partition{3, 2, 2}, Partition{3, 1, 1, 1, 1}));
  EXPECT_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  EXPECT_TRUE(dominates(Partition{3, 1}, Partition{2, 2}));
  EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
  EXPECT_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
  EXPECT_THROW((void)dominates(Partition{3}, Partition{2}), DomainError);
}

TEST(Collapse, Examples) {
  EXPECT_EQ(collapse(Partition{4, 2}, Eps::Orthogonal), (Partition{3, 3}));
  EXPECT_EQ(collapse(Partition{3, 3, 1}, Eps::Orthogonal), (Partition{3, 3, 1}));
  EXPECT_EQ(collapse(Partition{3, 1}, Eps::Symplectic), (Partition{2, 2}));
  EXPECT_THROW((void)collapse(Partition{3}, Eps::Symplectic), DomainError);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_eps(4, Eps::Symplectic),
            (std::vector<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_eps(7, Eps::Orthogonal),
            (std::vector<Partition>{{7}, {5, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 1, 1, 1, 1}, {2, 2, 1, 1, 1},
                                    {1, 1, 1, 1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_eps(1, Eps::Orthogonal), (std::vector<Partition>{{1}}));
  EXPECT_TRUE(enumerate_eps(5, Eps::Symplectic).empty());
}

TEST(MinimalDegenerations, Examples) {
  EXPECT_EQ(minimal_degenerations(Partition{3, 2, 2}, Eps::Orthogonal), (std::vector<Partition>{{3, 1, 1, 1, 1}}));
  EXPECT_EQ(minimal_degenerations(Partition{2}, Eps::Symplectic), (std::vector<Partition>{{1, 1}}));
  EXPECT_EQ(minimal_degenerations(Partition{5, 5}, Eps::Symplectic), (std::vector<Partition>{{4, 4, 2}}));
  EXPECT_THROW((void)minimal_degenerations(Partition{3, 2}, Eps::Symplectic), DomainError);
}

TEST(Hasse, Examples) {
  EXPECT_EQ(hasse(4, Eps::Symplectic),
            (std::vector<HasseEdge>{{{4}, {2, 2}}, {{2, 2}, {2, 1, 1}}, {{2, 1, 1}, {1, 1, 1, 1}}}));
  EXPECT_TRUE(hasse(2, Eps::Orthogonal).empty());
  EXPECT_EQ(hasse(5, Eps::Orthogonal),
            (std::vector<HasseEdge>{{{5}, {3, 1, 1}}, {{3, 1, 1}, {2, 2, 1}}, {{2, 2, 1}, {1, 1, 1, 1, 1}}}));
}

// --- properties against the oracles ---------------------------------------

TEST(Property, EnumerationMatchesOracle) {
  for (int n = 1; n <= 14; ++n) {
    const auto all = enumerate_partitions(n);
    const auto ref = oracle::partitions(n);
    ASSERT_EQ(all.size(), ref.size()) << n;
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(raw(all[i]), ref[i]);
    for (Eps e : {Eps::Orthogonal, Eps::Symplectic}) {
      const auto got = enumerate_eps(n, e);
      const auto want = oracle::eps_partitions(n, as_int(e));
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(raw(got[i]), want[i]);
      for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GT(got[i - 1], got[i]);
    }
  }
}

TEST(Property, CollapseIsMaximalAndIdempotent) {
  for (int n = 1; n <= 14; ++n) {
    for (const auto& p : oracle::partitions(n)) {
      for (Eps e : {Eps::Orthogonal, Eps::Symplectic}) {
        if (e == Eps::Symplectic && n % 2 != 0) continue;
        const Partition c = collapse(P(p), e);
        const auto want = oracle::collapse(p, as_int(e));
        ASSERT_TRUE(want.has_value());
        EXPECT_EQ(raw(c), *want) << P(p) << " eps " << as_int(e);
        EXPECT_EQ(collapse(c, e), c);
      }
    }
  }
}

TEST(Property, DualIsAntitoneInvolution) {
  for (int n = 1; n <= 14; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& a : all) EXPECT_EQ(dual(dual(a)), a);
    if (n > 10) continue;
    for (const auto& a : all) {
      for (const auto& b : all) EXPECT_EQ(dominates(b, a), dominates(dual(a), dual(b)));
    }
  }
}

TEST(Property, DominanceIsPartialOrder) {
  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& a : all) {
      EXPECT_TRUE(dominates(a, a));
      for (const auto& b : all) {
        EXPECT_EQ(dominates(a, b), oracle::leq(raw(b), raw(a)));
        if (a != b) EXPECT_FALSE(dominates(a, b) && dominates(b, a));
      }
    }
    if (n > 9) continue;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!dominates(a, b)) continue;
        for (const auto& c : all) {
          if (dominates(b, c)) EXPECT_TRUE(dominates(a, c));
        }
      }
    }
  }
}

TEST(Property, MinimalDegenerationsMatchBruteForceCovers) {
  std::size_t pairs = 0;
  for (int n = 1; n <= 12; ++n) {
    for (Eps e : {Eps::Orthogonal, Eps::Symplectic}) {
      for (const auto& lam : oracle::eps_partitions(n, as_int(e))) {
        const auto got = minimal_degenerations(P(lam), e);
        const auto want = oracle::covers(lam, as_int(e));
        ASSERT_EQ(got.size(), want.size()) << P(lam);
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(raw(got[i]), want[i]);
        pairs += got.size();
      }
    }
  }
  EXPECT_GT(pairs, 200u);
}

TEST(Property, HasseClosureIsDominance) {
  for (int n = 1; n <= 10; ++n) {
    for (Eps e : {Eps::Orthogonal, Eps::Symplectic}) {
      const auto nodes = enumerate_eps(n, e);
      std::map<Partition, std::vector<Partition>> succ;
      for (const auto& edge : hasse(n, e)) {
        EXPECT_GT(edge.from, edge.to);
        succ[edge.from].push_back(edge.to);
      }
      for (const auto& a : nodes) {
        std::set<Partition> reach{a};
        std::vector<Partition> stack{a};
        while (!stack.empty()) {
          const Partition x = stack.back();
          stack.pop_back();
          for (const auto& y : succ[x]) {
            if (reach.insert(y).second) stack.push_back(y);
          }
        }
        for (const auto& b : nodes) EXPECT_EQ(reach.count(b) == 1, dominates(a, b));
      }
    }
  }
}
