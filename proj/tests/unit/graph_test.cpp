#include <gtest/gtest.h>

#include "uoce/ontology/graph.hpp"

using namespace uoce::onto;

TEST(Term, OrderingPutsIrisBeforeBlanksBeforeLiterals) {
  const Term i = Term::iri("http://z.example/x");
  const Term b = Term::blank("a");
  const Term l = Term::literal("a");
  EXPECT_LT(i, b);
  EXPECT_LT(b, l);
  EXPECT_LT(i, l);
}

TEST(Term, LiteralsAlwaysCarryADatatype) {
  EXPECT_EQ(Term::literal("x").datatype, vocab::xsd("string"));
  const Term en = Term::lang_literal("colour", "EN-gb");
  EXPECT_EQ(en.lang, "en-gb");
  EXPECT_EQ(en.datatype, vocab::rdf("langString"));
  EXPECT_NE(Term::literal("1"), Term::typed("1", vocab::xsd("integer")));
}

TEST(Graph, SetSemantics) {
  Graph g;
  const Term s = Term::iri("http://example.org/s");
  const Term p = Term::iri("http://example.org/p");
  EXPECT_TRUE(g.add(s, p, Term::literal("v")));
  EXPECT_FALSE(g.add(s, p, Term::literal("v")));
  EXPECT_TRUE(g.add(s, p, Term::lang_literal("v", "en")));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.contains(s, p, Term::literal("v")));
  EXPECT_EQ(g.objects(s, p).size(), 2u);
}

TEST(Graph, RejectsIllFormedTriples) {
  Graph g;
  const Term p = Term::iri("http://example.org/p");
  EXPECT_THROW(g.add(Term::literal("s"), p, Term::literal("o")), GraphError);
  EXPECT_THROW(g.add(Term::iri("http://example.org/s"), Term::blank("p"), Term::literal("o")),
               GraphError);
  EXPECT_TRUE(g.empty());
}

TEST(Graph, MergeIsUnion) {
  Graph a, b;
  const Term p = Term::iri("http://example.org/p");
  a.add(Term::iri("http://example.org/1"), p, Term::literal("x"));
  b.add(Term::iri("http://example.org/1"), p, Term::literal("x"));
  b.add(Term::iri("http://example.org/2"), p, Term::literal("y"));
  b.bind_prefix("ex", "http://example.org/");
  a.merge(b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.prefixes().at("ex"), "http://example.org/");
  EXPECT_TRUE(a.same_triples(b));
}

TEST(Graph, HasType) {
  Graph g;
  const Term s = Term::iri("http://example.org/s");
  g.add(s, Term::iri(vocab::rdf("type")), Term::iri("http://example.org/C"));
  EXPECT_TRUE(g.has_type(s, "http://example.org/C"));
  EXPECT_FALSE(g.has_type(s, "http://example.org/D"));
  EXPECT_EQ(g.subjects(Term::iri(vocab::rdf("type")), Term::iri("http://example.org/C")).size(), 1u);
}
