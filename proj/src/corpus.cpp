#include "boolrep/corpus.hpp"

#include <algorithm>

namespace boolrep {

namespace {

FiniteSemigroup chain(int k) {
  // meet semilattice on 0 < 1 < ... < k-1 under min
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) {
    labels.push_back("c" + std::to_string(a));
    for (int b = 0; b < k; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
    }
  }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

FiniteSemigroup constant_product(int k, bool left) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = left ? a : b;
    }
  }
  return FiniteSemigroup::from_table(std::move(t));
}

FiniteSemigroup rect_band(int rows, int cols) {
  // elements (i, j) numbered i * cols + j; (i, j)(k, l) = (i, l)
  const int k = rows * cols;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::string> labels(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    labels[static_cast<std::size_t>(a)] =
        "(" + std::to_string(a / cols) + "," + std::to_string(a % cols) + ")";
    for (int b = 0; b < k; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a / cols) * cols + (b % cols);
    }
  }
  return FiniteSemigroup::from_table(std::move(t), std::move(labels));
}

FiniteSemigroup cyclic(int k) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
    }
  }
  return FiniteSemigroup::from_table(std::move(t));
}

FiniteSemigroup brandt_b2() {
  // 0 and the matrix units e11, e12, e21, e22; eij ekl = [j=k] eil
  auto unit = [](int i, int j) { return 1 + 2 * i + j; };
  std::vector<std::vector<int>> t(5, std::vector<int>(5, 0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          if (j == k) {
            t[static_cast<std::size_t>(unit(i, j))][static_cast<std::size_t>(unit(k, l))] =
                unit(i, l);
          }
        }
      }
    }
  }
  return FiniteSemigroup::from_table(std::move(t), {"0", "e11", "e12", "e21", "e22"});
}

FiniteSemigroup full_transformation(int degree) {
  // all transpositions plus one rank-(degree-1) idempotent generate,
  // with the identity arising as the square of a transposition
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < degree; ++i) {
    for (int j = i + 1; j < degree; ++j) {
      std::vector<int> swap(static_cast<std::size_t>(degree));
      for (int p = 0; p < degree; ++p) {
        swap[static_cast<std::size_t>(p)] = p == i ? j : (p == j ? i : p);
      }
      gens.push_back(std::move(swap));
    }
  }
  std::vector<int> collapse(static_cast<std::size_t>(degree));
  for (int p = 0; p < degree; ++p) {
    collapse[static_cast<std::size_t>(p)] = p;
  }
  collapse[static_cast<std::size_t>(degree - 1)] = 0;
  gens.push_back(std::move(collapse));
  return FiniteSemigroup::from_transformations(static_cast<std::size_t>(degree), gens);
}

FiniteSemigroup syntactic_abstar() {
  // transition monoid of the minimal automaton of (ab)*:
  // states q0 (accept), q1, sink; identity adjoined as a generator
  return FiniteSemigroup::from_transformations(
      3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}});
}

FiniteSemigroup null2() {
  // xy = 0 for all x, y
  return FiniteSemigroup::from_table({{0, 0}, {0, 0}}, {"0", "a"});
}

FiniteSemigroup s3() {
  return FiniteSemigroup::from_transformations(3, {{1, 2, 0}, {1, 0, 2}});
}

}  // namespace

FiniteSemigroup load_corpus(const std::string& name) {
  if (name == "trivial") return chain(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "chain4") return chain(4);
  if (name == "leftzero2") return constant_product(2, true);
  if (name == "leftzero3") return constant_product(3, true);
  if (name == "rightzero2") return constant_product(2, false);
  if (name == "rightzero3") return constant_product(3, false);
  if (name == "rectband22") return rect_band(2, 2);
  if (name == "rectband23") return rect_band(2, 3);
  if (name == "z2") return cyclic(2);
  if (name == "z3") return cyclic(3);
  if (name == "s3") return s3();
  if (name == "brandt-b2") return brandt_b2();
  if (name == "t2") return full_transformation(2);
  if (name == "t3") return full_transformation(3);
  if (name == "syntactic-abstar") return syntactic_abstar();
  if (name == "null2") return null2();
  std::string known;
  for (const std::string& n : corpus_names()) {
    known += known.empty() ? n : ", " + n;
  }
  throw InvalidInputError("unknown fixture: " + name + " (available: " + known + ")");
}

std::vector<std::string> corpus_names() {
  return {"trivial",     "chain2",     "chain3",    "chain4",       "leftzero2",
          "leftzero3",   "rightzero2", "rightzero3", "rectband22",  "rectband23",
          "z2",          "z3",         "s3",        "brandt-b2",    "t2",
          "t3",          "syntactic-abstar",        "null2"};
}

}  // namespace boolrep
