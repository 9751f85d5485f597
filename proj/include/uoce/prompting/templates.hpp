#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uoce/io/dataset.hpp"
#include "uoce/prompting/prompt.hpp"

namespace uoce::prompt {

/// Natural-language description of the ten opinion components.
std::string_view default_definitions();

/// F block: asks for a JSON array of objects with exactly the ten slot keys,
/// "N/A" for absent components and no surrounding prose; ends with an
/// example reply.
std::string canonical_output_schema();

/// The example reply embedded in canonical_output_schema().
std::string canonical_output_example();

/// Two examples, one with a qualifier and a reason and one without. Their
/// sentences are not part of any evaluation data.
std::vector<Example> default_examples();

/// Drops examples whose input matches (after normalization) the text of a
/// dataset sentence.
std::vector<Example> exclude_dataset_sentences(const std::vector<Example>& examples,
                                               const io::DatasetFile& ds);

/// Reads an examples file: a JSON array of {"input": text, "opinions":
/// [tuple objects]}. Outputs are rendered with render_tuples_json.
std::vector<Example> load_examples_file(const std::string& path);

}  // namespace uoce::prompt
