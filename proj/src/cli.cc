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


#include "mctx/cli.h"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "mctx/annotation.h"
#include "mctx/errors.h"
#include "mctx/evaluation.h"
#include "mctx/extraction_io.h"
#include "mctx/labels.h"
#include "mctx/pipeline.h"
#include "mctx/rules.h"
#include "mctx/stats.h"
#include "mctx/units.h"

namespace mctx {
namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or to `out` when path is empty or "-".
void WriteOutput(const std::string &path, const std::string &data,
                 std::ostream &out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << data;
  if (!file) throw Error("cannot write " + path);
}

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct CorpusFlags {
  std::string input;
  std::string format = "auto";
  std::string endpoint;
  int timeout_ms = 30000;
  int retries = 0;
  std::string rules;
  std::string units;
  bool allow_unknown_deps = false;
  int jobs = 0;
};

void AddCorpusFlags(CLI::App *cmd, CorpusFlags &flags, bool input_required) {
  CLI::Option *input =
      cmd->add_option("--input,-i", flags.input, "Annotated corpus or text");
  if (input_required) input->required();
  cmd->add_option("--format", flags.format, "auto, conllu, json or text")
      ->check(CLI::IsMember(
          {"auto", "conllu", "json", "annotation-json", "text"}));
  cmd->add_option("--endpoint", flags.endpoint,
                  "Annotation service URL for text input");
  cmd->add_option("--timeout-ms", flags.timeout_ms)->check(CLI::PositiveNumber);
  cmd->add_option("--retries", flags.retries)->check(CLI::NonNegativeNumber);
  cmd->add_option("--rules", flags.rules, "Rule file (JSON)");
  cmd->add_option("--units", flags.units, "Unit table (TSV)");
  cmd->add_flag("--allow-unknown-deps", flags.allow_unknown_deps);
  cmd->add_option("--jobs,-j", flags.jobs, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
}

// Rule set and gazetteer either loaded from flags or the built-in defaults.
struct Resources {
  RuleSet rules_storage;
  UnitGazetteer units_storage;
  const RuleSet *rules = &RuleSet::Default();
  const UnitGazetteer *units = &UnitGazetteer::Default();
};

void LoadResources(const CorpusFlags &flags, Resources &res) {
  if (!flags.rules.empty()) {
    RuleLoadOptions options;
    options.allow_unknown_deps = flags.allow_unknown_deps;
    res.rules_storage = RuleSet::Load(ReadFile(flags.rules), options);
    res.rules = &res.rules_storage;
  }
  if (!flags.units.empty()) {
    res.units_storage = UnitGazetteer::Parse(ReadFile(flags.units));
    res.units = &res.units_storage;
  }
}

std::vector<Sentence> LoadCorpus(const CorpusFlags &flags, std::ostream &err) {
  std::string format = flags.format;
  if (format == "auto") {
    if (EndsWith(flags.input, ".conllu") || EndsWith(flags.input, ".conll")) {
      format = "conllu";
    } else if (EndsWith(flags.input, ".json")) {
      format = "json";
    } else {
      format = "text";
    }
  }
  const std::string contents = ReadFile(flags.input);
  WarningSink warn = [&err](const std::string &msg) {
    err << "warning: " << msg << "\n";
  };
  if (format == "conllu") return ParseConllu(std::string_view(contents), warn);
  if (format == "json" || format == "annotation-json") {
    return ParseAnnotationJson(contents, warn);
  }
  if (flags.endpoint.empty()) {
    throw Error("text input requires --endpoint");
  }
  ServiceOptions options;
  options.timeout_ms = flags.timeout_ms;
  options.retries = flags.retries;
  return FetchAnnotations(contents, flags.endpoint, options, warn);
}

std::map<int, LabeledSentence> IndexLabels(
    const std::vector<LabeledSentence> &labels) {
  std::map<int, LabeledSentence> index;
  for (const LabeledSentence &l : labels) {
    if (!index.emplace(l.sentence_num, l).second) {
      throw Error("duplicate sentence_num " + std::to_string(l.sentence_num) +
                  " in labels");
    }
  }
  return index;
}

// Fails when labels name sentences absent from the corpus.
void CheckLabelCoverage(const std::vector<LabeledSentence> &labels,
                        const std::vector<Sentence> &corpus) {
  std::set<int> ids;
  for (const Sentence &s : corpus) ids.insert(s.id);
  std::string missing;
  for (const LabeledSentence &l : labels) {
    if (!ids.contains(l.sentence_num)) {
      if (!missing.empty()) missing += ", ";
      missing += std::to_string(l.sentence_num);
    }
  }
  if (!missing.empty()) {
    throw Error("labels reference sentences missing from the corpus: " +
                missing);
  }
}

// Runs extraction and reports per-sentence failures. Returns false if any.
bool RunPipeline(const std::vector<Sentence> &corpus,
                 const ExtractOptions &options, int jobs,
                 std::vector<SentenceExtractions> &records,
                 std::ostream &err) {
  std::vector<SentenceResult> results =
      ExtractCorpusParallel(corpus, options, jobs);
  bool ok = true;
  records.clear();
  records.reserve(results.size());
  for (SentenceResult &r : results) {
    if (!r.ok()) {
      err << "sentence " << r.record.sentence_num << ": " << r.error << "\n";
      ok = false;
    }
    records.push_back(std::move(r.record));
  }
  return ok;
}

struct ExtractFlags {
  CorpusFlags corpus;
  std::string labels;
  bool override_spans = false;
  std::string output;
  bool strict = false;
};

int RunExtract(const ExtractFlags &flags, std::ostream &out,
               std::ostream &err) {
  if (flags.override_spans && flags.labels.empty()) {
    throw Error("--override-spans requires --labels");
  }
  Resources res;
  LoadResources(flags.corpus, res);
  const std::vector<Sentence> corpus = LoadCorpus(flags.corpus, err);

  std::map<int, LabeledSentence> labels;
  ExtractOptions options;
  options.rules = res.rules;
  options.gazetteer = res.units;
  if (flags.override_spans) {
    labels = IndexLabels(LoadLabels(ReadFile(flags.labels)));
    options.override_labels = &labels;
  }

  std::vector<SentenceExtractions> records;
  const bool ok =
      RunPipeline(corpus, options, flags.corpus.jobs, records, err);

  std::string data;
  size_t measurements = 0;
  size_t related = 0;
  for (const SentenceExtractions &r : records) {
    if (r.measurements.empty()) continue;
    measurements += r.measurements.size();
    for (const Extraction &e : r.measurements) related += e.related.size();
    data += SerializeSentenceExtractions(r);
    data += '\n';
  }
  WriteOutput(flags.output, data, out);
  err << "sentences: " << corpus.size() << "  measurements: " << measurements
      << "  related: " << related << "\n";
  return ok || !flags.strict ? 0 : 1;
}

struct EvaluateFlags {
  CorpusFlags corpus;
  std::string labels;
  bool end_to_end = false;
  std::string from_extractions;
  std::string report_json;
};

int RunEvaluate(const EvaluateFlags &flags, std::ostream &out,
                std::ostream &err) {
  Resources res;
  LoadResources(flags.corpus, res);
  const std::vector<LabeledSentence> labels =
      LoadLabels(ReadFile(flags.labels));
  const std::vector<Sentence> corpus = LoadCorpus(flags.corpus, err);
  CheckLabelCoverage(labels, corpus);

  std::vector<SentenceExtractions> records;
  bool ok = true;
  if (!flags.from_extractions.empty()) {
    records = ReadExtractionsJsonl(ReadFile(flags.from_extractions));
    std::map<int, const Sentence *> by_id;
    for (const Sentence &s : corpus) by_id.emplace(s.id, &s);
    for (SentenceExtractions &r : records) {
      auto it = by_id.find(r.sentence_num);
      if (it == by_id.end()) {
        throw Error("extraction for sentence " +
                    std::to_string(r.sentence_num) +
                    " has no annotated sentence in --input");
      }
      RestoreDescriptorRelations(r, *it->second);
    }
  } else {
    std::map<int, LabeledSentence> index;
    ExtractOptions options;
    options.rules = res.rules;
    options.gazetteer = res.units;
    if (!flags.end_to_end) {
      index = IndexLabels(labels);
      options.override_labels = &index;
    }
    ok = RunPipeline(corpus, options, flags.corpus.jobs, records, err);
  }

  const MetricsReport report = Aggregate(ScoreCorpus(labels, records));
  out << report.ToText();
  if (!flags.report_json.empty()) {
    WriteOutput(flags.report_json, report.ToJson() + "\n", out);
  }
  return ok ? 0 : 1;
}

struct StatsFlags {
  CorpusFlags corpus;
  std::string extractions;
  std::optional<std::string> dimension;
  std::optional<std::string> unit;
  double bin_width = 0;
  std::string output;
};

int RunStats(const StatsFlags &flags, std::ostream &out, std::ostream &err) {
  Resources res;
  LoadResources(flags.corpus, res);
  const HistogramSpec spec = ResolveHistogramSpec(
      flags.dimension, flags.unit, flags.bin_width, *res.units);

  std::vector<SentenceExtractions> records;
  bool ok = true;
  if (!flags.extractions.empty()) {
    records = ReadExtractionsJsonl(ReadFile(flags.extractions));
  } else if (!flags.corpus.input.empty()) {
    ExtractOptions options;
    options.rules = res.rules;
    options.gazetteer = res.units;
    ok = RunPipeline(LoadCorpus(flags.corpus, err), options, flags.corpus.jobs,
                     records, err);
  } else {
    throw Error("stats needs --extractions or --input");
  }
  WriteOutput(flags.output, HistogramCsv(BuildHistogram(records, spec)), out);
  return ok ? 0 : 1;
}

int RunValidate(const std::string &path, bool allow_unknown,
                std::ostream &out) {
  RuleLoadOptions options;
  options.allow_unknown_deps = allow_unknown;
  const RuleSet rules = RuleSet::Load(ReadFile(path), options);
  out << path << ": ok (" << rules.nodes().size() << " dependency types)\n";
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Measurement context extraction"};
  app.name(args.empty() ? "mctx" : args[0]);
  app.require_subcommand(1);

  ExtractFlags extract;
  CLI::App *extract_cmd =
      app.add_subcommand("extract", "Extract measurements and related words");
  AddCorpusFlags(extract_cmd, extract.corpus, true);
  extract_cmd->add_option("--labels", extract.labels, "Labels (JSON/JSONL)");
  extract_cmd->add_flag("--override-spans", extract.override_spans,
                        "Take measurement spans from --labels");
  extract_cmd->add_option("--output,-o", extract.output, "JSONL output");
  extract_cmd->add_flag("--strict", extract.strict,
                        "Fail when any sentence fails");

  EvaluateFlags evaluate;
  CLI::App *evaluate_cmd =
      app.add_subcommand("evaluate", "Score extractions against labels");
  AddCorpusFlags(evaluate_cmd, evaluate.corpus, true);
  evaluate_cmd->add_option("--labels", evaluate.labels)->required();
  CLI::Option *e2e = evaluate_cmd->add_flag(
      "--end-to-end", evaluate.end_to_end, "Use detected spans");
  evaluate_cmd
      ->add_option("--from-extractions", evaluate.from_extractions,
                   "Score an existing JSONL file")
      ->excludes(e2e);
  evaluate_cmd->add_option("--report-json", evaluate.report_json);

  StatsFlags stats;
  CLI::App *stats_cmd =
      app.add_subcommand("stats", "Histogram of normalized quantities");
  AddCorpusFlags(stats_cmd, stats.corpus, false);
  stats_cmd->add_option("--extractions", stats.extractions, "JSONL input");
  CLI::Option *dim = stats_cmd->add_option("--dimension", stats.dimension);
  CLI::Option *unit = stats_cmd->add_option("--unit", stats.unit);
  dim->excludes(unit);
  stats_cmd->add_option("--bin-width", stats.bin_width)
      ->required()
      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--output,-o", stats.output, "CSV output");

  CLI::App *rules_cmd = app.add_subcommand("rules", "Rule file utilities");
  rules_cmd->require_subcommand(1);
  std::string rules_path;
  bool rules_allow_unknown = false;
  CLI::App *validate_cmd =
      rules_cmd->add_subcommand("validate", "Check a rule file");
  validate_cmd->add_option("file", rules_path)->required();
  validate_cmd->add_flag("--allow-unknown-deps", rules_allow_unknown);

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("mctx");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (*extract_cmd) return RunExtract(extract, out, err);
    if (*evaluate_cmd) return RunEvaluate(evaluate, out, err);
    if (*stats_cmd) return RunStats(stats, out, err);
    if (*validate_cmd) {
      return RunValidate(rules_path, rules_allow_unknown, out);
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace mctx
