#include "uoce/prompting/templates.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "uoce/core/normalize.hpp"
#include "uoce/io/tuple_json.hpp"

namespace uoce::prompt {

namespace {

OpinionTuple make(std::initializer_list<std::pair<Slot, std::string_view>> values) {
  OpinionTuple t;
  for (const auto& [slot, v] : values) t.set(slot, v);
  return t;
}

}  // namespace

std::string_view default_definitions() {
  return "Definitions:\n"
         "An opinion is a judgement someone expresses about something. For every opinion in the "
         "input, identify these components:\n"
         "- aspect term (at): the words in the input naming the feature being judged; N/A when "
         "the feature is only implied.\n"
         "- aspect category (ac): a label for the feature being judged, e.g. "
         "Battery#Operational_Performance.\n"
         "- target entity (te): the thing the opinion is about, e.g. a product, a hotel or a "
         "book.\n"
         "- sentiment expression (se): the words in the input that carry the judgement; N/A when "
         "the judgement is implicit.\n"
         "- sentiment polarity (sp): positive, negative or neutral.\n"
         "- sentiment intensity (si): weak, average or strong.\n"
         "- holder span (hs): the words in the input naming who holds the opinion; N/A when the "
         "holder is not mentioned.\n"
         "- holder entity (he): who holds the opinion; use author when it is the writer.\n"
         "- qualifier (q): words in the input that restrict the opinion to a group, a situation "
         "or a condition; otherwise N/A.\n"
         "- reason (r): words in the input that explain why the holder has the opinion; "
         "otherwise N/A.\n"
         "Spans (at, se, hs, q, r) are copied verbatim from the input.\n";
}

std::string canonical_output_example() {
  const std::vector<OpinionTuple> sample = {make({{Slot::AspectTerm, "screen"},
                                                  {Slot::AspectCategory, "Display#Quality"},
                                                  {Slot::TargetEntity, "phone"},
                                                  {Slot::SentimentExpression, "crisp"},
                                                  {Slot::SentimentPolarity, "positive"},
                                                  {Slot::SentimentIntensity, "average"},
                                                  {Slot::HolderSpan, "N/A"},
                                                  {Slot::HolderEntity, "author"},
                                                  {Slot::Qualifier, "N/A"},
                                                  {Slot::Reason, "N/A"}})};
  return io::render_tuples_json(sample);
}

std::string canonical_output_schema() {
  std::string out =
      "Format:\n"
      "Reply with a JSON array and nothing else: no explanation before or after it and no code "
      "fences. Each element is an object for one opinion with exactly these ten keys:\n";
  for (Slot s : kAllSlots) {
    out += "  \"" + std::string(slot_key(s)) + "\": " + std::string(slot_name(s)) + "\n";
  }
  out +=
      "Every value is a string. Write \"N/A\" for a component that is not expressed. \"sp\" is "
      "one of \"positive\", \"negative\", \"neutral\"; \"si\" is one of \"weak\", \"average\", "
      "\"strong\". If the input contains no opinion, reply with [].\n"
      "Example reply:\n";
  out += canonical_output_example();
  out += "\n";
  return out;
}

std::vector<Example> default_examples() {
  const std::string first_input =
      "As a frequent traveller, I found the suitcase handle flimsy because it snapped after two "
      "trips.";
  const OpinionTuple first = make({{Slot::AspectTerm, "suitcase handle"},
                                   {Slot::AspectCategory, "Build#Durability"},
                                   {Slot::TargetEntity, "suitcase"},
                                   {Slot::SentimentExpression, "flimsy"},
                                   {Slot::SentimentPolarity, "negative"},
                                   {Slot::SentimentIntensity, "average"},
                                   {Slot::HolderSpan, "I"},
                                   {Slot::HolderEntity, "author"},
                                   {Slot::Qualifier, "As a frequent traveller"},
                                   {Slot::Reason, "it snapped after two trips"}});
  const std::string second_input = "The staff at the front desk were wonderfully friendly.";
  const OpinionTuple second = make({{Slot::AspectTerm, "staff at the front desk"},
                                    {Slot::AspectCategory, "Service#General"},
                                    {Slot::TargetEntity, "hotel"},
                                    {Slot::SentimentExpression, "wonderfully friendly"},
                                    {Slot::SentimentPolarity, "positive"},
                                    {Slot::SentimentIntensity, "strong"},
                                    {Slot::HolderEntity, "author"}});
  return {{first_input, io::render_tuples_json(std::vector{first})},
          {second_input, io::render_tuples_json(std::vector{second})}};
}

std::vector<Example> exclude_dataset_sentences(const std::vector<Example>& examples,
                                               const io::DatasetFile& ds) {
  std::set<std::string> texts;
  for (const SentenceRecord& r : ds.records) {
    if (auto n = normalize_value(r.text)) texts.insert(*n);
  }
  std::vector<Example> out;
  for (const Example& e : examples) {
    const auto n = normalize_value(e.input);
    if (!n || !texts.contains(*n)) out.push_back(e);
  }
  return out;
}

std::vector<Example> load_examples_file(const std::string& path) {
  const std::string text = io::read_text_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw io::InputError(path + ": examples file is not valid JSON: " + e.what());
  }
  if (!doc.is_array()) throw io::InputError(path + ": examples file must hold a JSON array");
  std::vector<Example> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = path + ": [" + std::to_string(i) + "]";
    const nlohmann::json& item = doc[i];
    if (!item.is_object() || !item.contains("input") || !item["input"].is_string() ||
        !item.contains("opinions") || !item["opinions"].is_array())
      throw io::InputError(where + ": expected {\"input\": text, \"opinions\": [...]}");
    std::vector<OpinionTuple> tuples;
    std::vector<Diagnostic> diags;
    for (const auto& t : item["opinions"]) tuples.push_back(io::tuple_from_json(t, false, where, diags));
    for (const Diagnostic& d : diags) {
      if (d.severity == Severity::Error) throw io::InputError(where + ": " + format_diagnostic(d));
    }
    out.push_back({item["input"].get<std::string>(), io::render_tuples_json(tuples)});
  }
  return out;
}

}  // namespace uoce::prompt
