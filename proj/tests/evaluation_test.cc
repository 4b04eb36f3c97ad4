// Copyright 2026 The mctx Authors.
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


#include <cmath>
#include <random>

#include <doctest.h>

#include "mctx/errors.h"
#include "mctx/evaluation.h"
#include "mctx/labels.h"
#include "mctx/pipeline.h"
#include "test_util.h"

namespace mctx {
namespace {

std::vector<RelatedWord> Words(const std::vector<std::string> &names) {
  std::vector<RelatedWord> words;
  for (const std::string &n : names) {
    RelatedWord w;
    w.raw_name = n;
    w.token_index = static_cast<int>(words.size()) + 1;
    words.push_back(w);
  }
  return words;
}

std::vector<LabeledEntity> Entities(const std::vector<std::string> &names) {
  std::vector<LabeledEntity> entities;
  for (const std::string &n : names) entities.push_back({n, {}});
  return entities;
}

TEST_CASE("load labels") {
  const std::vector<LabeledSentence> fig4 =
      LoadLabels(testing::ReadTestData("fig4_label.json"));
  REQUIRE(fig4.size() == 1);
  CHECK(fig4[0].sentence_num == 41);
  REQUIRE(fig4[0].measurements.size() == 1);
  const LabeledMeasurement &m = fig4[0].measurements[0];
  CHECK(m.number == "10");
  CHECK(m.unit == "%");
  REQUIRE(m.related.size() == 2);
  CHECK(m.related[0] == LabeledEntity{"Samples", {}});
  CHECK(m.related[1] == LabeledEntity{"formalin", {"buffered"}});

  CHECK(LoadLabels("[]").empty());
  CHECK(LoadLabels("").empty());
  CHECK_THROWS_AS(LoadLabels(R"({"sentence_num": 1, "sentence": "10 m",
      "measurements": [{"number": "10"}]})"),
                  SchemaError);
  CHECK_THROWS_AS(LoadLabels(R"({"sentence_num": 1, "sentence": "10 m",
      "measurements": [{"number": "10", "unit": "m", "related": [{"river": []}]}]})"),
                  SchemaError);

  const std::vector<LabeledSentence> mini =
      LoadLabels(testing::ReadTestData("mini_labels.jsonl"));
  CHECK(mini.size() == 23);
  CHECK(LoadLabels(ToLabelsJsonl(mini)) == mini);
}

TEST_CASE("score sentence examples") {
  CHECK(ScoreSentence(Words({"Samples", "formalin"}), Entities({"Samples", "formalin"})) ==
        ConfusionCounts{2, 0, 0});
  CHECK(ScoreSentence({}, Entities({"resolution"})) == ConfusionCounts{0, 0, 1});
  CHECK(ScoreSentence(Words({"resolution", "imagery"}), Entities({"resolution"})) ==
        ConfusionCounts{1, 1, 0});
  CHECK(ScoreSentence(Words({"Resolution"}), Entities({"resolution"})) ==
        ConfusionCounts{1, 0, 0});
  // One-to-one: a single extraction cannot satisfy two labels.
  CHECK(ScoreSentence(Words({"m"}), Entities({"m", "m"})) == ConfusionCounts{1, 0, 1});
}

TEST_CASE("compound descriptors form a phrase") {
  RelatedWord w;
  w.raw_name = "moisture";
  w.token_index = 3;
  w.descriptors = {{"Mean", 1, "amod"}, {"soil", 2, "compound"}};
  CHECK(MatchForms(w) == std::vector<std::string>{"moisture", "soil moisture"});
  CHECK(ScoreSentence({w}, Entities({"soil moisture"})) == ConfusionCounts{1, 0, 0});
  CHECK(ScoreSentence({w}, Entities({"Mean soil moisture"})) == ConfusionCounts{0, 1, 1});
}

TEST_CASE("aggregate over reference confusion counts") {
  struct Row {
    const char *source;
    ConfusionCounts counts;
    double p, r, f;
  };
  const Row rows[] = {{"news", {82, 19, 31}, 0.812, 0.726, 0.766},
                      {"scientific", {143, 36, 84}, 0.799, 0.630, 0.704}};
  std::vector<std::pair<std::string, ConfusionCounts>> counts;
  for (const Row &row : rows) counts.emplace_back(row.source, row.counts);
  const MetricsReport report = Aggregate(counts);
  for (const Row &row : rows) {
    const Metrics &m = report.per_source.at(row.source);
    CHECK(std::round(*m.precision * 1000) / 1000 == doctest::Approx(row.p));
    CHECK(std::round(*m.recall * 1000) / 1000 == doctest::Approx(row.r));
    CHECK(std::round(*m.fscore * 1000) / 1000 == doctest::Approx(row.f));
  }
  CHECK(report.combined.counts == ConfusionCounts{225, 55, 115});
  CHECK(std::round(*report.combined.precision * 1000) / 1000 == doctest::Approx(0.804));
  CHECK(std::round(*report.combined.recall * 1000) / 1000 == doctest::Approx(0.662));
  CHECK(std::round(*report.combined.fscore * 1000) / 1000 == doctest::Approx(0.726));

  const std::string text = report.ToText();
  CHECK(text.find("80.4%") != std::string::npos);
  CHECK(text.find("66.2%") != std::string::npos);
  CHECK(text.find("72.6%") != std::string::npos);
}

TEST_CASE("undefined ratios") {
  const Metrics none = ComputeMetrics({0, 0, 0});
  CHECK_FALSE(none.precision);
  CHECK_FALSE(none.recall);
  CHECK_FALSE(none.fscore);
  const Metrics miss = ComputeMetrics({0, 0, 3});
  CHECK_FALSE(miss.precision);
  CHECK(*miss.recall == 0);
  CHECK_FALSE(miss.fscore);
  const Metrics wrong = ComputeMetrics({0, 2, 3});
  CHECK(*wrong.fscore == 0);
  CHECK(Aggregate({}).ToText().find("n/a") != std::string::npos);
}

TEST_CASE("accounting identities and symmetry") {
  std::mt19937 rng(29);
  const std::vector<std::string> pool = {"a", "b", "c", "B", "d", "resolution"};
  auto draw = [&] {
    std::vector<std::string> v;
    for (int n = std::uniform_int_distribution<int>(0, 6)(rng); n > 0; --n) {
      v.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
    }
    return v;
  };
  for (int i = 0; i < 5000; ++i) {
    const std::vector<std::string> x = draw(), y = draw();
    const ConfusionCounts c = ScoreSentence(Words(x), Entities(y));
    REQUIRE(c.tp + c.fn == static_cast<int>(y.size()));
    REQUIRE(c.tp + c.fp == static_cast<int>(x.size()));
    const ConfusionCounts swapped = ScoreSentence(Words(y), Entities(x));
    REQUIRE(swapped.tp == c.tp);
    REQUIRE(swapped.fp == c.fn);
    REQUIRE(swapped.fn == c.fp);
  }
}

TEST_CASE("corpus scoring aligns duplicate measurements in order") {
  LabeledSentence label;
  label.sentence_num = 1;
  label.sentence = "The trench was 5 m deep and the wall was 5 m high.";
  label.measurements = {{"5", "m", Entities({"trench"})}, {"5", "m", Entities({"wall"})}};
  SentenceExtractions record;
  record.sentence_num = 1;
  Extraction first, second;
  first.span.raw_value = second.span.raw_value = "5";
  first.span.raw_unit_name = second.span.raw_unit_name = "m";
  first.related = Words({"trench"});
  second.related = Words({"wall"});
  record.measurements = {first, second};
  MetricsReport report = Aggregate(ScoreCorpus({label}, {record}));
  CHECK(report.combined.counts == ConfusionCounts{2, 0, 0});

  std::swap(record.measurements[0], record.measurements[1]);
  report = Aggregate(ScoreCorpus({label}, {record}));
  CHECK(report.combined.counts == ConfusionCounts{0, 2, 2});

  // Missing extraction: all labeled entities are false negatives.
  report = Aggregate(ScoreCorpus({label}, {}));
  CHECK(report.combined.counts == ConfusionCounts{0, 0, 2});
}

TEST_CASE("fig4 sentence scores perfectly against its label") {
  const std::vector<Sentence> corpus = testing::LoadConlluFixture("fig4.conllu");
  const std::vector<LabeledSentence> labels =
      LoadLabels(testing::ReadTestData("fig4_label.json"));
  std::map<int, LabeledSentence> index = {{41, labels[0]}};
  ExtractOptions options;
  options.override_labels = &index;
  std::vector<SentenceExtractions> records;
  for (SentenceResult &r : ExtractCorpusSerial(corpus, options)) {
    REQUIRE(r.ok());
    records.push_back(r.record);
  }
  CHECK(Aggregate(ScoreCorpus(labels, records)).combined.counts ==
        ConfusionCounts{2, 0, 0});
}

TEST_CASE("self-consistency on the mini corpus") {
  const std::vector<Sentence> corpus = testing::LoadConlluFixture("mini_corpus.conllu");
  std::vector<SentenceExtractions> records;
  for (SentenceResult &r : ExtractCorpusSerial(corpus, {})) {
    REQUIRE(r.ok());
    if (!r.record.measurements.empty()) records.push_back(r.record);
  }
  const std::vector<LabeledSentence> labels = LabelsFromExtractions(records);
  std::map<int, LabeledSentence> index;
  for (const LabeledSentence &l : labels) index.emplace(l.sentence_num, l);
  ExtractOptions options;
  options.override_labels = &index;
  std::vector<SentenceExtractions> rerun;
  for (SentenceResult &r : ExtractCorpusSerial(corpus, options)) rerun.push_back(r.record);
  const Metrics m = Aggregate(ScoreCorpus(labels, rerun)).combined;
  CHECK(m.counts.fp == 0);
  CHECK(m.counts.fn == 0);
  CHECK(m.counts.tp > 0);
  CHECK(*m.precision == 1.0);
  CHECK(*m.recall == 1.0);
}

}  // namespace
}  // namespace mctx
