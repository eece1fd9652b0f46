#include <set>

#include "doctest.h"
#include "support/chain_oracle.hpp"
#include "unavoid/factor_graph.hpp"

using namespace unavoid;

TEST_CASE("graph of xx: one factor, two vertices, the two self edges") {
  Pattern p = Pattern::parse("xx");
  FactorGraph g(p);
  CHECK(g.factor_count() == 1);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 2);  // ^0xx -> ^1xx and ^1xx -> ^0xx
}

TEST_CASE("graph of aba: two factors, four vertices, four edges") {
  Pattern p = Pattern::parse("aba");
  FactorGraph g(p);
  CHECK(g.factor_count() == 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);  // each factor pairs with itself on both sides
  CHECK(g.factors()[0] == std::pair<Letter, Letter>{0, 1});
  CHECK(g.factors()[1] == std::pair<Letter, Letter>{1, 0});
}

TEST_CASE("graph of a single letter is empty") {
  FactorGraph g(Pattern::parse("x"));
  CHECK(g.factor_count() == 0);
  CHECK(g.vertex_count() == 0);
}

TEST_CASE("repeated 2-factors are deduplicated") {
  FactorGraph g(Pattern::parse("ababab"));
  CHECK(g.factor_count() == 2);
}

TEST_CASE("is_free on the anchor instances") {
  CHECK_FALSE(is_free(Pattern::parse("xx"), 0));
  CHECK(is_free(Pattern::parse("aba"), 0));
  CHECK(is_free(Pattern::parse("aba"), 1));
  CHECK(is_free(Pattern::parse("xyxy"), 0));
  CHECK(is_free(Pattern::parse("xyxy"), 1));
}

TEST_CASE("absent letters are reported distinctly") {
  CHECK_THROWS_AS(is_free(Pattern::parse("xx"), 1), Error);
  try {
    is_free(Pattern::parse("xx"), 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::letter_absent);
  }
}

TEST_CASE("graph freeness agrees with the chain oracle on a small sweep") {
  for (std::size_t len = 1; len <= 6; ++len) {
    enumerate_canonical(len, 3, [&](const std::vector<Letter>& letters, int k) {
      Pattern p(letters);
      for (Letter x = 0; x < k; ++x) {
        CAPTURE(p.format());
        CHECK(is_free(p, x) == oracle::is_free(p, x));
      }
    });
  }
}

TEST_CASE("conflict relation matches the oracle pairwise") {
  for (std::size_t len = 2; len <= 5; ++len) {
    enumerate_canonical(len, 3, [&](const std::vector<Letter>& letters, int k) {
      Pattern p(letters);
      FactorGraph g(p);
      ConflictRelation rel(g, p.alphabet_size());
      for (Letter x = 0; x < k; ++x) {
        for (Letter y = 0; y < k; ++y) {
          CAPTURE(p.format());
          CHECK(rel.conflicts(x, y) == oracle::conflicts(p, x, y));
        }
      }
    });
  }
}

TEST_CASE("is_free_set on the anchor instances") {
  CHECK(is_free_set(Pattern::parse("aba"), {0}));
  CHECK_FALSE(is_free_set(Pattern::parse("ab"), {0, 1}));
  CHECK_FALSE(is_free_set(Pattern::parse("xx"), {0}));
  CHECK_THROWS_AS(is_free_set(Pattern::parse("ab"), {}), Error);
  CHECK_THROWS_AS(is_free_set(Pattern::parse("ab"), {3}), Error);
}

TEST_CASE("singleton free sets coincide with free letters") {
  for (std::size_t len = 1; len <= 6; ++len) {
    enumerate_canonical(len, 3, [&](const std::vector<Letter>& letters, int k) {
      Pattern p(letters);
      for (Letter x = 0; x < k; ++x) CHECK(is_free_set(p, {x}) == is_free(p, x));
    });
  }
}

TEST_CASE("free_letters on the anchor instances") {
  CHECK(free_letters(Pattern::parse("aba")) == std::vector<Letter>{0, 1});
  CHECK(free_letters(Pattern::parse("xx")).empty());
  CHECK(free_letters(Pattern::parse("x")) == std::vector<Letter>{0});
}

TEST_CASE("free set enumeration: order, content, and subset closure") {
  auto sets = all_free_sets(Pattern::parse("aba"));
  // {a} and {b} are free; (a,b) and (b,a) both conflict, so no pair
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == std::vector<Letter>{0});
  CHECK(sets[1] == std::vector<Letter>{1});

  CHECK(all_free_sets(Pattern::parse("xx")).empty());
  auto singleton = all_free_sets(Pattern::parse("x"));
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0] == std::vector<Letter>{0});

  for (std::size_t len = 2; len <= 5; ++len) {
    enumerate_canonical(len, 3, [&](const std::vector<Letter>& letters, int) {
      Pattern p(letters);
      auto all = all_free_sets(p);
      // sizes ascend; every set is free; every nonempty subset appears
      std::set<std::vector<Letter>> seen;
      std::size_t last_size = 1;
      for (const auto& s : all) {
        CHECK(s.size() >= last_size);
        last_size = s.size();
        CHECK(is_free_set(p, std::set<Letter>(s.begin(), s.end())));
        seen.insert(s);
      }
      for (const auto& s : all) {
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          std::vector<Letter> sub = s;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(seen.count(sub) == 1);
        }
      }
    });
  }
}

TEST_CASE("free set enumeration matches brute force over all subsets") {
  for (std::size_t len = 2; len <= 5; ++len) {
    enumerate_canonical(len, 3, [&](const std::vector<Letter>& letters, int k) {
      Pattern p(letters);
      std::set<std::vector<Letter>> expected;
      for (int mask = 1; mask < (1 << k); ++mask) {
        std::set<Letter> xs;
        for (Letter x = 0; x < k; ++x) {
          if ((mask >> x) & 1) xs.insert(x);
        }
        bool free = true;
        for (Letter x : xs) {
          for (Letter y : xs) {
            if (oracle::conflicts(p, x, y)) free = false;
          }
        }
        if (free) expected.insert(std::vector<Letter>(xs.begin(), xs.end()));
      }
      auto got = all_free_sets(p);
      CHECK(got.size() == expected.size());
      for (const auto& s : got) CHECK(expected.count(s) == 1);
    });
  }
}

TEST_CASE("dot export names both sides of each factor") {
  auto dot = FactorGraph(Pattern::parse("aba")).to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("^0 ab") != std::string::npos);
  CHECK(dot.find("^1 ba") != std::string::npos);
}
