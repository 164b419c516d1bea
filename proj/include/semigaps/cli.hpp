// semigaps - gap-structure analytics for numerical semigroups
//
// Command-line front end and the JSON-lines record schema.

#ifndef SEMIGAPS_CLI_HPP_
#define SEMIGAPS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "trees.hpp"

namespace semigaps::cli {

  using json = nlohmann::ordered_json;

  //! One SemigroupRecord: frobenius, genus, l, multiplicity,
  //! embedding_dimension, type, min_generators, gaps, pseudo_frobenius,
  //! flags {symmetric, pseudo_symmetric, irreducible}.
  json to_record(NumericalSemigroup const& s);

  //! Rebuilds the semigroup from a record's min_generators.
  NumericalSemigroup from_record(json const& record);

  //! Graphviz digraph with one node per tree vertex (id: comma-joined
  //! minimal generators) and child -> parent edges labelled with x.
  std::string to_dot(SemigroupTree const& tree);

  //! Runs the CLI with argv[1..] in \p args. Exit codes: 0 success, 1
  //! verification mismatch, 2 usage or domain error.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semigaps::cli

#endif  // SEMIGAPS_CLI_HPP_
