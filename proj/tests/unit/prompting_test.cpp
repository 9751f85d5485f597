#include <gtest/gtest.h>

#include <set>

#include "support/golden_prompts.hpp"
#include "uoce/io/dataset.hpp"
#include "uoce/ontology/schema.hpp"
#include "uoce/ontology/serialize.hpp"

using namespace uoce;
using namespace uoce::prompt;
using namespace uoce::testing;

namespace {

PromptConfig nl_config(Ordering o = {Block::D, Block::E, Block::F}) {
  PromptConfig c;
  c.definitions_text = "defs";
  c.examples = {{"In one", "[]"}};
  c.format_text = "fmt";
  c.ordering = o;
  return c;
}

}  // namespace

TEST(Ordering, ParseAndName) {
  EXPECT_EQ(all_orderings().size(), 6u);
  std::set<std::string> names;
  for (const auto& o : all_orderings()) {
    names.insert(ordering_name(o));
    EXPECT_EQ(parse_ordering(ordering_name(o)), o);
  }
  EXPECT_EQ(names.size(), 6u);
  EXPECT_EQ(parse_ordering("edf"), (Ordering{Block::E, Block::D, Block::F}));
  EXPECT_FALSE(parse_ordering("DDF"));
  EXPECT_FALSE(parse_ordering("DE"));
  EXPECT_FALSE(parse_ordering("DEFQ"));
}

TEST(NlPrompt, ExactLayout) {
  const PromptText p = build_nl_prompt(nl_config({Block::F, Block::D, Block::E}), "Hello .");
  EXPECT_EQ(p.text,
            "fmt\n"
            "defs\n"
            "Examples:\nInput: In one\nOutput: []\n\n"
            "Input: Hello .\nOutput:");
  ASSERT_EQ(p.spans.size(), 4u);
  EXPECT_EQ(p.spans.back().block, Block::Query);
  EXPECT_EQ(p.span_text(Block::D), "defs\n");
  EXPECT_EQ(extract_query(p.text), "Hello .");
}

TEST(NlPrompt, SpansAreContiguousAndQueryLast) {
  for (const auto& o : all_orderings()) {
    const PromptText p = build_nl_prompt(nl_config(o), "q");
    std::size_t at = 0;
    for (std::size_t i = 0; i < p.spans.size(); ++i) {
      EXPECT_EQ(p.spans[i].begin, at);
      at = p.spans[i].end;
      if (i < 3) {
        EXPECT_EQ(p.spans[i].block, o[i]);
      }
    }
    EXPECT_EQ(at, p.text.size());
    EXPECT_EQ(p.spans.back().block, Block::Query);
  }
}

TEST(NlPrompt, ConfigErrors) {
  PromptConfig c = nl_config();
  c.examples.clear();
  EXPECT_THROW(build_nl_prompt(c, "q"), PromptError);
  c = nl_config();
  c.definitions_text.clear();
  EXPECT_THROW(build_nl_prompt(c, "q"), PromptError);
  c = nl_config();
  c.kind = PromptKind::OntoPrompt;
  EXPECT_THROW(build_onto_prompt(c, "q"), PromptError);  // no format
}

TEST(OntoPrompt, DBlockIsTheSerialization) {
  for (auto f : onto::kAllFormats) {
    PromptConfig c = nl_config();
    c.kind = PromptKind::OntoPrompt;
    c.onto_format = f;
    const PromptText p = build_prompt(c, "q");
    EXPECT_EQ(p.span_text(Block::D), onto::serialize_graph(onto::build_uoc_schema(), f))
        << onto::format_name(f);
    EXPECT_EQ(p.text.find("defs"), std::string::npos);
  }
}

TEST(ExtractQuery, RecoversOnlyTheFinalQuery) {
  EXPECT_EQ(extract_query("Examples:\nInput: a\nOutput: []\n\nInput: b c\nOutput:"), "b c");
  EXPECT_FALSE(extract_query("no cue here"));
  EXPECT_FALSE(extract_query("Input: x\nOutput: done"));
}

TEST(Templates, DefaultsAreUsable) {
  const std::string schema = canonical_output_schema();
  for (Slot s : kAllSlots)
    EXPECT_NE(schema.find("\"" + std::string(slot_key(s)) + "\""), std::string::npos) << slot_key(s);
  EXPECT_NE(schema.find(canonical_output_example()), std::string::npos);
  const auto ex = default_examples();
  ASSERT_EQ(ex.size(), 2u);
  EXPECT_NE(ex[0].output.find("\"q\""), std::string::npos);
  for (Slot s : kAllSlots)
    EXPECT_NE(std::string(default_definitions()).find(std::string(slot_name(s))), std::string::npos)
        << slot_name(s);
}

TEST(Templates, ExamplesOverlappingTheDatasetAreDropped) {
  const auto ex = default_examples();
  io::DatasetFile ds;
  ds.records.push_back({"a", Domain::Books, "  " + ex[0].input + " ", {}});
  const auto kept = exclude_dataset_sentences(ex, ds);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], ex[1]);
}

TEST(GoldenPrompts, ThirteenStableTexts) {
  const auto prompts = golden_prompts();
  ASSERT_EQ(prompts.size(), 13u);
  std::set<std::string> distinct;
  for (const GoldenPrompt& g : prompts) {
    const auto path = golden_prompt_dir() / g.file;
    if (update_golden_requested()) write_golden(path, g.text.text);
    const auto expected = read_golden(path);
    ASSERT_TRUE(expected) << "missing golden file " << path << " (set UOCE_UPDATE_GOLDEN=1)";
    EXPECT_EQ(g.text.text, *expected) << g.file;
    EXPECT_EQ(g.text.spans.back().block, Block::Query) << g.file;
    EXPECT_EQ(extract_query(g.text.text), kBostonSentence) << g.file;
    // Rebuilding gives the same bytes.
    EXPECT_EQ(build_prompt(g.config, kBostonSentence).text, g.text.text) << g.file;
    distinct.insert(g.text.text);
  }
  EXPECT_EQ(distinct.size(), 13u);
}
