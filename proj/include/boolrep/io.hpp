// JSON input and output plus the human-readable eggbox rendering.
//
// Input schemas, both 0-indexed:
//   A (Cayley table):      {"order": n, "table": [[...]], "labels": [...]?}
//   B (transformations):   {"degree": m, "generators": [[...], ...]}
// Boolean vectors serialize as bitstrings, coordinate 0 first ("0110").
// Reports use nlohmann's ordered_json so field order is deterministic.

#ifndef BOOLREP_IO_HPP_
#define BOOLREP_IO_HPP_

#include <cstdint>
#include <memory>
#include <string>

#include "json.hpp"

#include "boolrep/characters.hpp"
#include "boolrep/green.hpp"
#include "boolrep/irreducibles.hpp"
#include "boolrep/lattice.hpp"
#include "boolrep/module.hpp"
#include "boolrep/partition.hpp"
#include "boolrep/semigroup.hpp"

namespace boolrep {

using json = nlohmann::ordered_json;

// Dispatches on the keys present ("table" vs "generators"). Missing or
// mistyped fields surface as nlohmann exceptions; range and associativity
// problems as the usual construction errors.
FiniteSemigroup semigroup_from_json(const json& j);

// Parse errors propagate as nlohmann parse_error; unreadable files as
// InvalidInputError.
FiniteSemigroup read_semigroup_file(const std::string& path);

json semigroup_to_json(const FiniteSemigroup& s);
json partition_to_json(const Partition& p);
json matrix_to_json(const BoolMatrix& m);
json lattice_to_json(const SpanLattice& l);
json module_to_json(const BModule& m);
json green_to_json(const FiniteSemigroup& s, const GreenStructure& g);
json character_to_json(const FiniteSemigroup& s, const CharacterTable& t);

// One J-class as a grid: rows are its R-classes, columns its L-classes,
// each cell the H-class size, starred when the H-class has an idempotent.
std::string eggbox_diagram(const FiniteSemigroup& s, const GreenStructure& g, int j);

struct ReportOptions {
  bool oracles = false;
  std::uint64_t seed = 1;
  // Order cap for the brute-force largest-J'-congruence oracle.
  std::size_t jprime_cap = 7;
  // Module size cap for enumeration cross-checks.
  std::size_t module_cap = 10;
  // Per-target sji support cap for character decompositions.
  std::size_t decomp_cap = 20;
  // Size caps for the endomorphism span and the full End enumeration.
  std::size_t span_cap = std::size_t{1} << 14;
  std::size_t endo_cap = std::size_t{1} << 20;
};

// The full pipeline on one semigroup: green summary, one record per
// regular J-class (sandwich matrix, module, freeness, faithfulness,
// image verdicts, density, characters), the direct sum kernel, and the
// oracle section when enabled. `source` is a free-form input descriptor.
json analysis_report(const std::shared_ptr<const FiniteSemigroup>& s,
                     const std::string& source, const ReportOptions& opt = {});

// Human rendering of an analysis_report.
std::string render_report(const json& report);

}  // namespace boolrep

#endif  // BOOLREP_IO_HPP_
