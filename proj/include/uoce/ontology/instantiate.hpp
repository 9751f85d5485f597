#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"
#include "uoce/ontology/graph.hpp"
#include "uoce/ontology/schema.hpp"

namespace uoce::onto {

class InvalidTupleError : public std::invalid_argument {
 public:
  InvalidTupleError(const std::string& what, std::vector<Diagnostic> diagnostics)
      : std::invalid_argument(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct InstanceNaming {
  std::string instance_base{kDefaultInstanceBase};
  std::string schema_base{kDefaultSchemaBase};
};

/// IRI of an individual minted for one opinion component:
/// instance_base + percent-encoded sentence id + "/" + role + "/" + ordinal.
std::string instance_iri(const InstanceNaming& naming, std::string_view sentence_id,
                         std::string_view role, std::size_t ordinal);

/// Knowledge-graph individuals for one opinion: an Opinion linked to its
/// Sentiment, Target (with Aspect), Holder and, when present, Qualifier and
/// Reason. Categorical values that look like IRIs are linked as resources,
/// other values become string literals. Throws InvalidTupleError when the
/// tuple fails validate_tuple with an error.
Graph instantiate_opinion(const OpinionTuple& tuple, const SentenceRecord& sentence,
                          std::size_t ordinal, const InstanceNaming& naming = {});

/// All opinions of a sentence, ordinals following list order.
Graph instantiate_sentence(const SentenceRecord& sentence, const InstanceNaming& naming = {});

/// Checks instance triples against the schema:
///  - subject of each UOC property carries the property's domain type
///  - structural objects are typed individuals of the range class
///  - polarity/intensity objects are among the six enumeration individuals
///  - categorical objects are string literals or IRIs (typed with the range
///    class when typed at all); attribute objects are literals
///  - each Opinion has exactly one conveysSentiment and isExpressedOnTarget
std::vector<Diagnostic> validate_graph(const Graph& graph,
                                       std::string_view schema_base = kDefaultSchemaBase);

}  // namespace uoce::onto
