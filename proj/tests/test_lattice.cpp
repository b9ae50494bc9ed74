#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "boolrep/error.hpp"
#include "boolrep/lattice.hpp"

using namespace boolrep;

namespace {

// span of {(1,0,0), (1,1,0), (0,1,1)}: a pentagon 0 < a < b, 0 < c, top
SpanLattice pentagon() {
  return SpanLattice::span(3, {BoolVec::from_string("100"), BoolVec::from_string("110"),
                               BoolVec::from_string("011")});
}

// 0, three incomparable atoms, top
SpanLattice diamond() {
  return SpanLattice::span(3, {BoolVec::from_string("011"), BoolVec::from_string("101"),
                               BoolVec::from_string("110")});
}

// every value table that preserves 0 and binary joins, by definition
std::set<Endo> brute_endos(const SpanLattice& l) {
  const int n = static_cast<int>(l.size());
  std::set<Endo> out;
  Endo f(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = f[0] == 0;
    for (int i = 0; ok && i < n; ++i) {
      for (int j = 0; ok && j < n; ++j) {
        ok = f[static_cast<std::size_t>(l.join(i, j))] ==
             l.join(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
      }
    }
    if (ok) {
      out.insert(f);
    }
    int pos = n - 1;
    while (pos >= 0 && f[static_cast<std::size_t>(pos)] == n - 1) {
      f[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++f[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

TEST_CASE("pentagon span structure") {
  SpanLattice l = pentagon();
  REQUIRE(l.size() == 5);
  // canonical order: zero first, then by popcount and numeric value
  CHECK(l.element(0).to_string() == "000");
  CHECK(l.element(1).to_string() == "100");
  CHECK(l.element(2).to_string() == "110");
  CHECK(l.element(3).to_string() == "011");
  CHECK(l.element(4).to_string() == "111");
  CHECK(l.sji() == std::vector<int>{1, 2, 3});
  CHECK_FALSE(l.is_free());
  CHECK_FALSE(l.is_distributive());  // pentagons never are
  CHECK(l.index_of(BoolVec::from_string("010")) == -1);
  CHECK(l.top() == 4);
  CHECK(l.join(1, 3) == 4);
  CHECK(l.meet(2, 3) == 0);
  CHECK(l.meet(2, 4) == 2);
  CHECK(l.leq(1, 2));
  CHECK_FALSE(l.leq(2, 1));
}

TEST_CASE("decompositions of the pentagon top") {
  SpanLattice l = pentagon();
  // all subsets of sji joining to the top, by (size, lex)
  std::vector<std::vector<int>> all = all_decompositions(l, 4);
  CHECK(all == std::vector<std::vector<int>>{{1, 3}, {2, 3}, {1, 2, 3}});
  // dropping any element of an irredundant decomposition loses the join
  CHECK(irredundant_decompositions(l, 4) ==
        std::vector<std::vector<int>>{{1, 3}, {2, 3}});
  // zero decomposes only as the empty join
  CHECK(all_decompositions(l, 0) == std::vector<std::vector<int>>{{}});
  // an sji element: itself, possibly padded by smaller sji elements
  CHECK(all_decompositions(l, 2) == std::vector<std::vector<int>>{{2}, {1, 2}});
  CHECK(irredundant_decompositions(l, 2) == std::vector<std::vector<int>>{{2}});
  CHECK_THROWS_AS(all_decompositions(SpanLattice::free_lattice(4), 15, 3),
                  CapExceededError);
}

TEST_CASE("free lattices") {
  SpanLattice f3 = SpanLattice::free_lattice(3);
  CHECK(f3.size() == 8);
  CHECK(f3.is_free());
  CHECK(f3.is_distributive());
  CHECK(f3.sji().size() == 3);
  for (int i : f3.sji()) {
    CHECK(f3.element(i).count() == 1);
  }
  CHECK(diamond().is_free() == false);
}

TEST_CASE("abstract join tables re-embed with joins preserved") {
  // the diamond as an abstract table: 0, three atoms, top
  const int T = 4;
  std::vector<std::vector<int>> join(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      join[x][y] = x == y ? x : (x == 0 ? y : (y == 0 ? x : T));
    }
  }
  std::vector<int> ix;
  SpanLattice l = SpanLattice::from_join_table(join, ix);
  REQUIRE(l.size() == 5);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      CHECK(l.join(ix[x], ix[y]) == ix[join[x][y]]);
    }
  }
  CHECK_FALSE(l.is_distributive());
  CHECK(l.sji().size() == 3);

  // malformed tables are rejected
  std::vector<std::vector<int>> not_comm = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(SpanLattice::from_join_table(not_comm, ix), InvalidInputError);
  std::vector<std::vector<int>> not_idem = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(SpanLattice::from_join_table(not_idem, ix), InvalidInputError);
  std::vector<std::vector<int>> no_zero = {{0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
  CHECK_THROWS_AS(SpanLattice::from_join_table(no_zero, ix), InvalidInputError);
}

TEST_CASE("duality reverses order and swaps join with meet") {
  for (const SpanLattice& l : {pentagon(), diamond(), SpanLattice::free_lattice(3)}) {
    DualLattice d = dual_lattice(l);
    REQUIRE(d.lattice.size() == l.size());
    const int n = static_cast<int>(l.size());
    // anchor is a bijection
    std::set<int> image(d.anchor.begin(), d.anchor.end());
    CHECK(image.size() == l.size());
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        CHECK(l.leq(m, k) == d.lattice.leq(d.anchor[k], d.anchor[m]));
        CHECK(d.anchor[l.meet(m, k)] == d.lattice.join(d.anchor[m], d.anchor[k]));
        CHECK(d.anchor[l.join(m, k)] == d.lattice.meet(d.anchor[m], d.anchor[k]));
      }
    }
    // dualizing twice gives back an isomorphic lattice through the anchors
    DualLattice dd = dual_lattice(d.lattice);
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        CHECK(l.leq(m, k) ==
              dd.lattice.leq(dd.anchor[d.anchor[m]], dd.anchor[d.anchor[k]]));
      }
    }
  }
}

TEST_CASE("functionals separate points; proper subsemilattices do not") {
  SpanLattice l = pentagon();
  DualLattice d = dual_lattice(l);
  const int n = static_cast<int>(l.size());
  // dual element values: bit x of the vector is the functional at x
  auto separates = [&](const std::vector<int>& members) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        bool split = false;
        for (int m : members) {
          split = split || d.lattice.element(m).get(static_cast<std::size_t>(x)) !=
                               d.lattice.element(m).get(static_cast<std::size_t>(y));
        }
        if (!split) {
          return false;
        }
      }
    }
    return true;
  };
  // enumerate join-closed subsets of the dual containing its zero
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) {
        members.push_back(i);
      }
    }
    bool closed = true;
    for (int a : members) {
      for (int b : members) {
        closed = closed && ((mask >> d.lattice.join(a, b)) & 1);
      }
    }
    if (!closed) {
      continue;
    }
    CHECK(separates(members) == (members.size() == l.size()));
  }
}

TEST_CASE("elementary endomorphism composition law") {
  SpanLattice l = pentagon();
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Endo e = elementary_endo(l, a, b);
      CHECK(is_endo(l, e));
      for (int c = 0; c < n; ++c) {
        for (int dd = 0; dd < n; ++dd) {
          Endo composed = endo_compose(e, elementary_endo(l, c, dd));
          if (l.leq(b, c)) {
            CHECK(composed == endo_zero(l));
          } else {
            CHECK(composed == elementary_endo(l, a, dd));
          }
        }
      }
    }
  }
  // a = infinity gives the zero map
  CHECK(elementary_endo(l, -1, 3) == endo_zero(l));
  CHECK(elementary_endo(l, l.top(), 3) == endo_zero(l));
}

TEST_CASE("all_endos agrees with the definitional filter") {
  for (const SpanLattice& l : {pentagon(), diamond(), SpanLattice::free_lattice(2)}) {
    std::vector<Endo> fast = all_endos(l);
    std::set<Endo> brute = brute_endos(l);
    CHECK(fast.size() == brute.size());
    for (const Endo& f : fast) {
      CHECK(brute.count(f) == 1);
      CHECK(is_endo(l, f));
    }
  }
  // endomorphisms of a free lattice are exactly the boolean matrices
  CHECK(all_endos(SpanLattice::free_lattice(2)).size() == 16);
  CHECK(all_endos(diamond()).size() == 50);
}

TEST_CASE("endo span is join closure with zero") {
  SpanLattice l = pentagon();
  std::vector<Endo> closure = endo_span(l, {endo_identity(l)});
  CHECK(closure.size() == 2);  // zero map and identity
  CHECK(std::count(closure.begin(), closure.end(), endo_zero(l)) == 1);
  CHECK(std::count(closure.begin(), closure.end(), endo_identity(l)) == 1);
  // joins of members stay inside
  std::vector<Endo> gens;
  for (int a : {0, 1}) {
    for (int b : {2, 4}) {
      gens.push_back(elementary_endo(l, a, b));
    }
  }
  std::vector<Endo> span = endo_span(l, gens);
  for (const Endo& f : span) {
    CHECK(is_endo(l, f));
    for (const Endo& g : span) {
      CHECK(std::count(span.begin(), span.end(), endo_join(l, f, g)) == 1);
    }
  }
}
