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


#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "mctx/cli.h"
#include "mctx/errors.h"
#include "mctx/extraction_io.h"
#include "mctx/pipeline.h"
#include "mctx/stats.h"
#include "mctx/units.h"
#include "test_util.h"

namespace mctx {
namespace {

namespace fs = std::filesystem;
using testing::TestDataPath;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mctx");
  std::ostringstream out, err;
  const int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string TempPath(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "mctx_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

void WriteFile(const std::string &path, const std::string &data) {
  std::ofstream(path, std::ios::binary) << data;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SentenceExtractions Record(const std::vector<std::pair<double, std::string>> &values) {
  SentenceExtractions record;
  for (const auto &[value, unit] : values) {
    Extraction e;
    e.normalized = Normalize(value, unit, UnitGazetteer::Default());
    record.measurements.push_back(e);
  }
  return record;
}

TEST_CASE("histogram examples") {
  const UnitGazetteer &units = UnitGazetteer::Default();
  HistogramSpec spec = ResolveHistogramSpec("length", std::nullopt, 100, units);
  auto bins = BuildHistogram({Record({{10, "m"}, {0.5, "km"}, {30, "m"}})}, spec);
  CHECK(bins == std::vector<std::pair<double, int>>{{0, 2}, {500, 1}});
  CHECK(HistogramCsv(bins) == "bin,count\n0,2\n500,1\n");

  CHECK(HistogramCsv(BuildHistogram({Record({{82, "%"}})}, spec)) == "bin,count\n");

  spec = ResolveHistogramSpec("length", std::nullopt, 1e-7, units);
  bins = BuildHistogram({Record({{1900, "nm"}, {1.9, "μm"}})}, spec);
  REQUIRE(bins.size() == 1);
  CHECK(bins[0].second == 2);

  spec = ResolveHistogramSpec(std::nullopt, "nm", 100, units);
  CHECK(spec.dimension == "length");
  CHECK(spec.bin_width == doctest::Approx(1e-7));

  CHECK_THROWS_WITH_AS(ResolveHistogramSpec("speed", std::nullopt, 1, units),
                       doctest::Contains("length"), Error);
  CHECK_THROWS_AS(ResolveHistogramSpec("length", std::nullopt, 0, units), Error);
  CHECK_THROWS_AS(ResolveHistogramSpec("length", "m", 1, units), Error);
}

TEST_CASE("serial and parallel extraction agree") {
  const std::vector<Sentence> corpus = testing::LoadConlluFixture("corpus500.conllu");
  const std::vector<SentenceResult> serial = ExtractCorpusSerial(corpus, {});
  for (int jobs : {1, 2, 4, 0}) {
    const std::vector<SentenceResult> parallel = ExtractCorpusParallel(corpus, {}, jobs);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      REQUIRE(SerializeSentenceExtractions(parallel[i].record) ==
              SerializeSentenceExtractions(serial[i].record));
    }
  }
}

TEST_CASE("extract matches the frozen golden file") {
  const Run first = Cli({"extract", "-i", TestDataPath("golden.conllu")});
  CHECK(first.status == 0);
  CHECK(first.out == testing::ReadTestData("golden.jsonl"));
  CHECK(first.err.find("sentences: 4  measurements: 4  related: 6") != std::string::npos);
  const Run second = Cli({"extract", "-i", TestDataPath("golden.conllu"), "--jobs", "3"});
  CHECK(second.out == first.out);

  const Run json = Cli({"extract", "-i", TestDataPath("fig3.json")});
  CHECK(json.status == 0);
  CHECK(json.out == first.out.substr(0, first.out.find('\n') + 1));
}

TEST_CASE("extract edge cases") {
  const std::string empty = TempPath("empty.conllu");
  WriteFile(empty, "");
  Run r = Cli({"extract", "-i", empty});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("sentences: 0  measurements: 0  related: 0") != std::string::npos);

  r = Cli({"extract", "-i", TempPath("does_not_exist.conllu")});
  CHECK(r.status != 0);
  CHECK(r.err.find("cannot read") != std::string::npos);

  r = Cli({"extract", "-i", TestDataPath("golden.conllu"), "--override-spans"});
  CHECK(r.status != 0);

  r = Cli({"extract", "-i", TestDataPath("golden.conllu"), "--rules",
           TestDataPath("fig4_label.json")});
  CHECK(r.status != 0);

  const std::string text = TempPath("raw.txt");
  WriteFile(text, "10 m");
  r = Cli({"extract", "-i", text});
  CHECK(r.status != 0);
  CHECK(r.err.find("--endpoint") != std::string::npos);
}

TEST_CASE("extract with override spans") {
  const Run r = Cli({"extract", "-i", TestDataPath("fig4.conllu"), "--labels",
                     TestDataPath("fig4_label.json"), "--override-spans"});
  CHECK(r.status == 0);
  const std::vector<SentenceExtractions> records = ReadExtractionsJsonl(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0].sentence_num == 41);
  CHECK(records[0].measurements.at(0).span.raw_unit_name == "%");

  // Unalignable labels fail the sentence; --strict turns that into a failure.
  const std::string bad = TempPath("bad_labels.json");
  WriteFile(bad, R"({"sentence_num": 41, "sentence": "Samples were fixed in 10% buffered formalin and embedded in paraffin.",
    "measurements": [{"number": "12", "unit": "%", "related": []}]})");
  Run lax = Cli({"extract", "-i", TestDataPath("fig4.conllu"), "--labels", bad,
                 "--override-spans"});
  CHECK(lax.status == 0);
  CHECK(lax.err.find("sentence 41") != std::string::npos);
  Run strict = Cli({"extract", "-i", TestDataPath("fig4.conllu"), "--labels", bad,
                    "--override-spans", "--strict"});
  CHECK(strict.status != 0);
}

TEST_CASE("evaluate") {
  const std::string corpus = TestDataPath("mini_corpus.conllu");
  const std::string labels = TestDataPath("mini_labels.jsonl");
  const std::string report = TempPath("report.json");
  const Run single = Cli({"evaluate", "-i", corpus, "--labels", labels, "--report-json", report});
  CHECK(single.status == 0);
  const auto json = nlohmann::json::parse(ReadFile(report));
  // tp + fn equals the number of labeled entities.
  CHECK(json["combined"]["tp"].get<int>() + json["combined"]["fn"].get<int>() == 29);

  const std::string extracted = TempPath("mini.jsonl");
  CHECK(Cli({"extract", "-i", corpus, "--labels", labels, "--override-spans", "-o", extracted})
            .status == 0);
  const Run composed = Cli({"evaluate", "-i", corpus, "--labels", labels,
                            "--from-extractions", extracted});
  CHECK(composed.status == 0);
  CHECK(composed.out == single.out);

  const Run e2e = Cli({"evaluate", "-i", corpus, "--labels", labels, "--end-to-end"});
  CHECK(e2e.status == 0);

  const std::string missing = TempPath("missing.jsonl");
  WriteFile(missing, R"({"sentence_num": 97, "sentence": "a", "measurements": []}
{"sentence_num": 98, "sentence": "b", "measurements": []}
)");
  const Run bad = Cli({"evaluate", "-i", corpus, "--labels", missing});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("97, 98") != std::string::npos);

  CHECK(Cli({"evaluate", "-i", corpus}).status != 0);
}

TEST_CASE("stats") {
  const Run r = Cli({"stats", "-i", TestDataPath("golden.conllu"), "--unit", "nm",
                     "--bin-width", "100"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("bin,count\n", 0) == 0);

  const std::string mixed = TempPath("mixed.jsonl");
  SentenceExtractions record = Record({{1900, "nm"}, {1.9, "μm"}});
  record.measurements[0].span.raw_value = "1900";
  record.measurements[0].span.raw_unit_name = "nm";
  record.measurements[1].span.raw_value = "1.9";
  record.measurements[1].span.raw_unit_name = "μm";
  WriteFile(mixed, SerializeSentenceExtractions(record) + "\n");
  const std::string csv = TempPath("mixed.csv");
  CHECK(Cli({"stats", "--extractions", mixed, "--dimension", "length", "--bin-width", "1e-7",
             "-o", csv})
            .status == 0);
  CHECK(ReadFile(csv) == "bin,count\n1.9e-06,2\n");

  const Run unknown = Cli({"stats", "--extractions", mixed, "--dimension", "speed",
                           "--bin-width", "1"});
  CHECK(unknown.status != 0);
  CHECK(unknown.err.find("known: ") != std::string::npos);
}

TEST_CASE("rules validate") {
  Run r = Cli({"rules", "validate", TestDataPath("conj_space_only_rules.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("ok") != std::string::npos);
  const std::string bad = TempPath("bad_rules.json");
  WriteFile(bad, R"({"nmod": {"enhanced": true, "formats": {}}})");
  r = Cli({"rules", "validate", bad});
  CHECK(r.status != 0);
  CHECK(r.err.find("/nmod/formats") != std::string::npos);
  CHECK(Cli({"rules"}).status != 0);
  CHECK(Cli({}).status != 0);
}

}  // namespace
}  // namespace mctx
