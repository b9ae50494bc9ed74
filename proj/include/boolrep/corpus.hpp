// Named desk-scale fixtures used by the tests and the CLI.

#ifndef BOOLREP_CORPUS_HPP_
#define BOOLREP_CORPUS_HPP_

#include <string>
#include <vector>

#include "boolrep/semigroup.hpp"

namespace boolrep {

// trivial; chain2..chain4 (semilattices, product = min); leftzero2/3;
// rightzero2/3; rectband22, rectband23; z2, z3, s3; brandt-b2; t2, t3;
// syntactic-abstar (syntactic monoid of (ab)*); null2.
// Throws InvalidInputError on unknown names.
FiniteSemigroup load_corpus(const std::string& name);

std::vector<std::string> corpus_names();

}  // namespace boolrep

#endif  // BOOLREP_CORPUS_HPP_
