#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "doctest.h"

#include "boolrep/characters.hpp"
#include "boolrep/corpus.hpp"
#include "boolrep/error.hpp"
#include "boolrep/irreducibles.hpp"

using namespace boolrep;

namespace {

std::shared_ptr<const FiniteSemigroup> fixture(const std::string& name) {
  return std::make_shared<const FiniteSemigroup>(load_corpus(name));
}

std::vector<int> regular_j_classes(const GreenStructure& g) {
  std::vector<int> out;
  for (int j = 0; j < g.n_j; ++j) {
    if (g.regular[static_cast<std::size_t>(j)]) {
      out.push_back(j);
    }
  }
  return out;
}

SpanLattice pentagon() {
  return SpanLattice::span(3, {BoolVec::from_string("100"), BoolVec::from_string("110"),
                               BoolVec::from_string("011")});
}

}  // namespace

TEST_CASE("irreducible representations are dense") {
  for (const std::string& name : corpus_names()) {
    CAPTURE(name);
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      CAPTURE(j);
      IrreducibleModule ir = irreducible_module(s, g, j);
      DensityReport d = density_report(ir.module);
      CHECK(d.dense);
      REQUIRE(d.full_end_known);
      // a free carrier of rank n forces the full 2^(n*n) matrix semiring
      if (ir.module.carrier.is_free()) {
        std::size_t n = ir.module.carrier.sji().size();
        CHECK(d.spans_full_end);
        CHECK(d.span_size == (std::size_t{1} << (n * n)));
        CHECK(d.end_size == d.span_size);
      }
    }
  }
}

TEST_CASE("frozen density numbers") {
  {
    auto s = fixture("brandt-b2");
    GreenStructure g = green_structure(*s);
    DensityReport d = density_report(irreducible_module(s, g, 1).module);
    CHECK(d.span_size == 16);
    CHECK(d.end_size == 16);
    CHECK(d.spans_full_end);
  }
  {
    // the middle class of t3: not free, yet still the whole endomorphism
    // semiring of its five element carrier
    auto s = fixture("t3");
    GreenStructure g = green_structure(*s);
    IrreducibleModule ir = irreducible_module(s, g, 1);
    CHECK_FALSE(ir.module.carrier.is_free());
    DensityReport d = density_report(ir.module);
    CHECK(d.span_size == 50);
    CHECK(d.end_size == 50);
    CHECK(d.spans_full_end);
  }
}

TEST_CASE("caps are honored") {
  auto s = fixture("brandt-b2");
  GreenStructure g = green_structure(*s);
  BModule m = irreducible_module(s, g, 1).module;
  CHECK_THROWS_AS(density_report(m, true, 4), CapExceededError);
  DensityReport d = density_report(m, true, 1 << 14, 4);
  CHECK(d.dense);
  CHECK_FALSE(d.full_end_known);
  CHECK_FALSE(d.spans_full_end);
  DensityReport skip = density_report(m, false);
  CHECK(skip.dense);
  CHECK_FALSE(skip.full_end_known);
}

TEST_CASE("identity submatrices characterize free row spans") {
  CHECK(free_row_span_test(BoolMatrix::identity(2)));
  CHECK(free_row_span_test(BoolMatrix::from_strings({"10", "01", "11"})));
  CHECK(free_row_span_test(BoolMatrix::from_strings({"11"})));
  CHECK_FALSE(free_row_span_test(BoolMatrix::from_strings({"110", "101", "011"})));

  // agreement with freeness of the span, over seeded random matrices
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    std::size_t rows = 1 + rng() % 4;
    std::size_t cols = 1 + rng() % 4;
    BoolMatrix c(rows, cols);
    bool any = false;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() & 1) {
          c.row(i).set(j, true);
          any = true;
        }
      }
    }
    if (!any) {
      continue;  // an all-zero matrix spans the one point lattice
    }
    CAPTURE(round);
    CHECK(free_row_span_test(c) == SpanLattice::row_span(c).is_free());
  }
}

TEST_CASE("the elementary maps form a semigroup acting irreducibly") {
  SpanLattice l = pentagon();
  const int n = static_cast<int>(l.size());
  // distinct elementary maps, zero map included
  std::map<Endo, int> index;
  std::vector<Endo> maps;
  auto add = [&](const Endo& f) {
    if (index.emplace(f, static_cast<int>(maps.size())).second) {
      maps.push_back(f);
    }
  };
  add(endo_zero(l));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add(elementary_endo(l, a, b));
    }
  }
  CHECK(maps.size() == 17);  // four usable bounds, four nonzero targets, zero

  // composition stays inside the set, so it forms a semigroup
  std::vector<std::vector<int>> table(maps.size(), std::vector<int>(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      Endo composed = endo_compose(maps[i], maps[j]);
      REQUIRE(index.count(composed) == 1);
      table[i][j] = index[composed];
    }
  }
  auto e = std::make_shared<const FiniteSemigroup>(FiniteSemigroup::from_table(table));

  std::vector<std::vector<int>> action(l.size(), std::vector<int>(maps.size()));
  for (int x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < maps.size(); ++s) {
      action[static_cast<std::size_t>(x)][s] = maps[s][static_cast<std::size_t>(x)];
    }
  }
  BModule m = make_module(e, l, action);
  CHECK(is_irreducible(m));
  CHECK(is_minimal_enum(m));
  CHECK(is_simple_enum(m));
  DensityReport d = density_report(m);
  CHECK(d.dense);
}
