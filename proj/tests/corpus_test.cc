// Copyright 2026 The mapcompare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mapcompare/corpus/document.h"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/corpus/thesaurus.h"
#include "mapcompare/corpus/vocabulary.h"
#include "oracles.h"

namespace mapcompare::corpus {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

absl::StatusOr<std::vector<Document>> Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseCorpus(in);
}

Thesaurus MakeThesaurus(const std::vector<ThesaurusRow>& rows) {
  absl::StatusOr<Thesaurus> t = Thesaurus::FromRows(rows);
  EXPECT_TRUE(t.ok()) << t.status();
  return *std::move(t);
}

TEST(IngestTest, ThreeRecordsInFileOrder) {
  auto docs = Parse(
      R"({"id":"b","title":"Second"})" "\n"
      R"({"id":"a","abstract":"First","references":["b"],"in_field":true})" "\n"
      R"({"id":"c","title":"Third","year":2011})" "\n");
  ASSERT_TRUE(docs.ok()) << docs.status();
  ASSERT_EQ(docs->size(), 3);
  EXPECT_EQ((*docs)[0].id, "b");
  EXPECT_EQ((*docs)[1].id, "a");
  EXPECT_TRUE((*docs)[1].in_field);
  EXPECT_THAT((*docs)[1].references, ElementsAre("b"));
  EXPECT_EQ((*docs)[2].year, 2011);
}

TEST(IngestTest, DuplicateIdNamesBothOccurrences) {
  auto docs = Parse(R"({"id":"d1","title":"x"})" "\n"
                    R"({"id":"d2","title":"y"})" "\n"
                    R"({"id":"d1","title":"z"})" "\n");
  ASSERT_FALSE(docs.ok());
  EXPECT_THAT(std::string(docs.status().message()), HasSubstr("d1"));
  EXPECT_THAT(std::string(docs.status().message()), HasSubstr("1"));
  EXPECT_THAT(std::string(docs.status().message()), HasSubstr("3"));
}

TEST(IngestTest, EmptyFileIsEmptyCorpus) {
  auto docs = Parse("");
  ASSERT_TRUE(docs.ok());
  EXPECT_THAT(*docs, IsEmpty());
}

TEST(IngestTest, MalformedRecordNamesLine) {
  auto docs = Parse(R"({"id":"d1","title":"x"})" "\n" "{not json\n");
  ASSERT_FALSE(docs.ok());
  EXPECT_THAT(std::string(docs.status().message()), HasSubstr("line 2"));
}

TEST(IngestTest, RecordWithoutTextIsRejected) {
  auto docs = Parse(R"({"id":"d1","references":[]})" "\n");
  ASSERT_FALSE(docs.ok());
  EXPECT_THAT(std::string(docs.status().message()), HasSubstr("line 1"));
}

TEST(IngestTest, ReferencesDeduplicatedWithoutSelf) {
  auto docs = Parse(R"({"id":"a","title":"t","references":["b","a","b","c"]})" "\n");
  ASSERT_TRUE(docs.ok());
  EXPECT_THAT((*docs)[0].references, ElementsAre("b", "c"));
}

TEST(IngestTest, CustomSchemaFieldNames) {
  IngestSchema schema;
  schema.id = "uid";
  schema.abstract = "ab";
  std::istringstream in(R"({"uid":"x","ab":"text"})" "\n");
  auto docs = ParseCorpus(in, schema);
  ASSERT_TRUE(docs.ok()) << docs.status();
  EXPECT_EQ((*docs)[0].id, "x");
  EXPECT_EQ((*docs)[0].abstract, "text");
}

TEST(ThesaurusTest, ParsesTreeAndRejectsCycles) {
  std::istringstream good("# comment\nn1\t\tRoot\nn2\tn1\tChild\n");
  auto t = Thesaurus::Parse(good);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(t->size(), 2);

  auto cyclic = Thesaurus::FromRows({{"a", "b", "A"}, {"b", "a", "B"}});
  EXPECT_FALSE(cyclic.ok());
  auto orphan = Thesaurus::FromRows({{"a", "missing", "A"}});
  EXPECT_FALSE(orphan.ok());
}

TEST(ThesaurusTest, MultiParentNodeHasOnePathPerRoute) {
  Thesaurus t = MakeThesaurus({{"r1", "", "Left"},
                               {"r2", "", "Right"},
                               {"x", "r1", "Shared"},
                               {"x", "r2", "Shared"}});
  int shared = -1;
  for (int i = 0; i < t.size(); ++i) {
    if (t.label(i) == "Shared") shared = i;
  }
  ASSERT_GE(shared, 0);
  auto paths = t.PathsFromRoot(shared);
  std::sort(paths.begin(), paths.end());
  EXPECT_THAT(paths, ElementsAre(ElementsAre("Left", "Shared"),
                                 ElementsAre("Right", "Shared")));
}

class ExtractTest : public ::testing::Test {
 protected:
  TermExtractor Make(const std::vector<std::string>& phrases,
                     NounSelector selector = NounSelector::AcceptAll()) {
    std::vector<ThesaurusRow> rows;
    for (size_t i = 0; i < phrases.size(); ++i) {
      rows.push_back({"n" + std::to_string(i), "", phrases[i]});
    }
    thesaurus_ = MakeThesaurus(rows);
    return TermExtractor(thesaurus_, TextNormalizer(DefaultStopwords(), {}),
                         std::move(selector));
  }
  Thesaurus thesaurus_;
};

TEST_F(ExtractTest, PhrasesConsumeTheirTokensInPlace) {
  TermExtractor ex = Make({"heart failure", "ejection fraction"});
  EXPECT_THAT(ex.ExtractText("heart failure with preserved ejection fraction"),
              ElementsAre("heart failure", "preserved", "ejection fraction"));
}

TEST_F(ExtractTest, LongerMatchWins) {
  TermExtractor ex = Make({"heart failure", "heart failure diastolic"});
  EXPECT_THAT(ex.ExtractText("heart failure diastolic onset"),
              ElementsAre("heart failure diastolic", "onset"));
}

TEST_F(ExtractTest, StopwordsAndDigitsOnlyGiveNothing) {
  TermExtractor ex = Make({"heart failure"});
  EXPECT_THAT(ex.ExtractText("the 2019 of and 42, in 7.5"), IsEmpty());
}

TEST_F(ExtractTest, LowercasesStripsUrlsAndPunctuation) {
  TermExtractor ex = Make({"Heart Failure"});
  EXPECT_THAT(ex.ExtractText("HEART-failure (see https://x.org/a) Outcomes!"),
              ElementsAre("heart failure", "see", "outcomes"));
}

TEST_F(ExtractTest, LemmaMapAppliesBeforeMatching) {
  thesaurus_ = MakeThesaurus({{"n0", "", "artery disease"}});
  TermExtractor ex(thesaurus_,
                   TextNormalizer(DefaultStopwords(), {{"arteries", "artery"},
                                                       {"outcomes", "outcome"}}),
                   NounSelector::AcceptAll());
  EXPECT_THAT(ex.ExtractText("arteries disease outcomes"),
              ElementsAre("artery disease", "outcome"));
}

TEST_F(ExtractTest, LexiconSelectorKeepsListedNounsAndAllPhrases) {
  TermExtractor ex = Make({"blood pressure"}, NounSelector::Lexicon({"patients"}));
  EXPECT_THAT(ex.ExtractText("high blood pressure in older patients"),
              ElementsAre("blood pressure", "patients"));
}

TEST_F(ExtractTest, PreTaggedRecordsBypassText) {
  TermExtractor ex = Make({"x"}, NounSelector::PreTagged());
  Document doc;
  doc.id = "d";
  doc.title = "ignored words here";
  doc.terms = std::vector<std::string>{"Stroke", "the", "Atrial Fibrillation"};
  EXPECT_THAT(ex.Extract(doc), ElementsAre("stroke", "atrial fibrillation"));
}

TEST_F(ExtractTest, PhraseNeverSpansTitleAndAbstract) {
  TermExtractor ex = Make({"heart failure"});
  Document doc;
  doc.title = "Heart";
  doc.abstract = "failure modes";
  EXPECT_THAT(ex.Extract(doc), ElementsAre("heart", "failure", "modes"));
}

TEST_F(ExtractTest, MatchingIsDeterministicAndMaximal) {
  const std::set<std::string> phrases = {"alpha beta", "alpha beta gamma",
                                         "beta gamma", "gamma"};
  TermExtractor ex = Make({phrases.begin(), phrases.end()});
  std::mt19937_64 rng(7);
  const std::vector<std::string> alphabet = {"alpha", "beta", "gamma", "delta"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> tokens;
    std::string text;
    for (int i = 0; i < 12; ++i) {
      tokens.push_back(alphabet[rng() % 4]);
      text += tokens.back() + " ";
    }
    const auto first = ex.ExtractText(text);
    EXPECT_EQ(first, ex.ExtractText(text));
    // No longer thesaurus phrase starts where an emitted term starts.
    size_t pos = 0;
    for (const std::string& term : first) {
      const size_t len = std::count(term.begin(), term.end(), ' ') + 1;
      std::string longer = term;
      for (size_t end = pos + len; end < tokens.size(); ++end) {
        longer += " " + tokens[end];
        EXPECT_FALSE(phrases.count(longer)) << text;
      }
      pos += len;
    }
    EXPECT_EQ(pos, tokens.size());
  }
}

TEST(VocabularyTest, UbiquitousTermRemoved) {
  auto vocab = BuildVocabulary({{"x", "y"}, {"x"}, {"x", "z"}}, {0.95, 0});
  ASSERT_TRUE(vocab.ok());
  EXPECT_THAT(vocab->terms(), ElementsAre("y", "z"));
}

TEST(VocabularyTest, NinetyPercentTermRetained) {
  std::vector<TermSequence> docs(10, TermSequence{"x"});
  docs[9] = {"y"};
  auto vocab = BuildVocabulary(docs, {0.95, 0});
  ASSERT_TRUE(vocab.ok());
  EXPECT_TRUE(vocab->IndexOf("x").has_value());
}

TEST(VocabularyTest, TopKTiesBrokenLexicographically) {
  auto vocab = BuildVocabulary({{"b", "a", "c", "c"}, {"d"}}, {0.95, 2});
  ASSERT_TRUE(vocab.ok());
  // c (2 tokens) then a (1, lexicographically before b and d) are dropped.
  EXPECT_THAT(vocab->terms(), ElementsAre("b", "d"));
}

TEST(VocabularyTest, EverythingFilteredIsAnError) {
  auto vocab = BuildVocabulary({{"x"}, {"x"}}, {0.95, 0});
  ASSERT_FALSE(vocab.ok());
  EXPECT_THAT(std::string(vocab.status().message()), HasSubstr("empty vocabulary"));
}

std::vector<TermSequence> RandomTermDocs(std::mt19937_64& rng, int docs, int terms) {
  // Zipf-like frequencies so both cuts bite.
  std::vector<double> weights(terms);
  for (int i = 0; i < terms; ++i) weights[i] = 1.0 / (i + 1);
  std::discrete_distribution<int> pick(weights.begin(), weights.end());
  std::vector<TermSequence> out(docs);
  for (auto& doc : out) {
    const int len = static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) doc.push_back("t" + std::to_string(pick(rng)));
    if (rng() % 2) doc.push_back("common");
  }
  for (int d = 0; d < docs; d += 1) out[d].push_back("everywhere");
  return out;
}

TEST(VocabularyTest, MatchesCountingOracleOn200Docs) {
  std::mt19937_64 rng(2024);
  const auto docs = RandomTermDocs(rng, 200, 80);
  for (int top_k : {0, 5, 20}) {
    auto vocab = BuildVocabulary(docs, {0.95, top_k});
    ASSERT_TRUE(vocab.ok());
    const std::set<std::string> oracle = testing::VocabularyOracle(docs, 0.95, top_k);
    EXPECT_EQ(std::set<std::string>(vocab->terms().begin(), vocab->terms().end()),
              oracle);
    EXPECT_TRUE(std::is_sorted(vocab->terms().begin(), vocab->terms().end()));
    for (int i = 0; i < vocab->size(); ++i) {
      EXPECT_LE(vocab->doc_frequency(i), 200);
      EXPECT_GE(vocab->total_frequency(i), vocab->doc_frequency(i));
    }
  }
}

TEST(VocabularyTest, OrderIndependentOverDocuments) {
  std::mt19937_64 rng(5);
  auto docs = RandomTermDocs(rng, 100, 40);
  auto a = BuildVocabulary(docs, {0.95, 7});
  std::shuffle(docs.begin(), docs.end(), rng);
  auto b = BuildVocabulary(docs, {0.95, 7});
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->terms(), b->terms());
}

TEST(BowTest, IndicesAndOutOfVocabulary) {
  auto vocab = BuildVocabulary({{"a", "b"}, {"c"}}, {1.5, 0});
  ASSERT_TRUE(vocab.ok());
  BowCorpus bow = ToBow({{"a", "b", "a"}, {"z"}}, *vocab);
  EXPECT_THAT(bow.docs[0], ElementsAre(0, 1, 0));
  EXPECT_THAT(bow.docs[1], IsEmpty());
}

TEST(BowTest, TokenTotalsMatchCountingOracle) {
  std::mt19937_64 rng(11);
  const auto docs = RandomTermDocs(rng, 50, 30);
  auto vocab = BuildVocabulary(docs, {0.95, 3});
  ASSERT_TRUE(vocab.ok());
  const BowCorpus bow = ToBow(docs, *vocab);
  std::map<std::string, int64_t> expected;
  int64_t retained = 0;
  for (const auto& doc : docs) {
    for (const auto& term : doc) {
      if (vocab->IndexOf(term)) {
        ++expected[term];
        ++retained;
      }
    }
  }
  std::map<std::string, int64_t> got;
  for (const auto& doc : bow.docs) {
    for (int w : doc) {
      ASSERT_LT(w, vocab->size());
      ++got[vocab->term(w)];
    }
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(bow.num_tokens(), retained);
  int64_t total = 0;
  for (int i = 0; i < vocab->size(); ++i) total += vocab->total_frequency(i);
  EXPECT_EQ(total, retained);
}

}  // namespace
}  // namespace mapcompare::corpus
