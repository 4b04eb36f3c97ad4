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

#include "mctx/evaluation.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include <json.hpp>

#include "mctx/graph.h"

namespace mctx {
namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string Percent(const std::optional<double> &ratio) {
  if (!ratio) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f%%", *ratio * 100.0);
  return buffer;
}

nlohmann::ordered_json MetricsToJson(const Metrics &m) {
  auto ratio = [](const std::optional<double> &r) -> nlohmann::ordered_json {
    if (!r) return nullptr;
    return *r;
  };
  return {{"tp", m.counts.tp},
          {"fp", m.counts.fp},
          {"fn", m.counts.fn},
          {"precision", ratio(m.precision)},
          {"recall", ratio(m.recall)},
          {"fscore", ratio(m.fscore)}};
}

}  // namespace

Metrics ComputeMetrics(const ConfusionCounts &c) {
  Metrics m;
  m.counts = c;
  if (c.tp + c.fp > 0) m.precision = double(c.tp) / (c.tp + c.fp);
  if (c.tp + c.fn > 0) m.recall = double(c.tp) / (c.tp + c.fn);
  if (m.precision && m.recall) {
    // Harmonic mean of precision and recall, written so tp == 0 gives 0.
    m.fscore = 2.0 * c.tp / (2.0 * c.tp + c.fp + c.fn);
  }
  return m;
}

std::string MetricsReport::ToText() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %6s %6s %6s %10s %10s %10s\n",
                "source", "tp", "fp", "fn", "precision", "recall", "f-score");
  out += line;
  auto row = [&](const std::string &name, const Metrics &m) {
    std::snprintf(line, sizeof(line), "%-12s %6d %6d %6d %10s %10s %10s\n",
                  name.c_str(), m.counts.tp, m.counts.fp, m.counts.fn,
                  Percent(m.precision).c_str(), Percent(m.recall).c_str(),
                  Percent(m.fscore).c_str());
    out += line;
  };
  for (const auto &[source, m] : per_source) row(source, m);
  row("combined", combined);
  return out;
}

std::string MetricsReport::ToJson() const {
  nlohmann::ordered_json sources = nlohmann::ordered_json::object();
  for (const auto &[source, m] : per_source) sources[source] = MetricsToJson(m);
  nlohmann::ordered_json out = {{"sources", std::move(sources)},
                                {"combined", MetricsToJson(combined)}};
  return out.dump(2);
}

std::vector<std::string> MatchForms(const RelatedWord &word) {
  std::vector<std::string> forms = {word.raw_name};
  std::vector<const Descriptor *> compounds;
  for (const Descriptor &d : word.descriptors) {
    if (d.relation == "compound") compounds.push_back(&d);
  }
  if (compounds.empty()) return forms;

  std::vector<std::pair<TokenIndex, std::string_view>> parts;
  parts.emplace_back(word.token_index, word.raw_name);
  for (const Descriptor *d : compounds) {
    parts.emplace_back(d->token_index, d->raw_name);
  }
  std::sort(parts.begin(), parts.end());
  std::string phrase;
  for (const auto &[index, text] : parts) {
    if (!phrase.empty()) phrase += ' ';
    phrase += text;
  }
  forms.push_back(std::move(phrase));
  return forms;
}

ConfusionCounts ScoreSentence(const std::vector<RelatedWord> &extracted,
                              const std::vector<LabeledEntity> &labeled) {
  std::vector<std::vector<std::string>> forms;
  forms.reserve(extracted.size());
  for (const RelatedWord &word : extracted) forms.push_back(MatchForms(word));

  std::vector<bool> used(extracted.size(), false);
  ConfusionCounts counts;
  for (const LabeledEntity &entity : labeled) {
    bool matched = false;
    for (size_t i = 0; i < extracted.size() && !matched; ++i) {
      if (used[i]) continue;
      for (const std::string &form : forms[i]) {
        if (EqualsIgnoreCase(form, entity.name)) {
          used[i] = true;
          matched = true;
          break;
        }
      }
    }
    if (matched) {
      ++counts.tp;
    } else {
      ++counts.fn;
    }
  }
  counts.fp = static_cast<int>(std::count(used.begin(), used.end(), false));
  return counts;
}

MetricsReport Aggregate(
    const std::vector<std::pair<std::string, ConfusionCounts>> &counts) {
  std::map<std::string, ConfusionCounts> sums;
  ConfusionCounts total;
  for (const auto &[source, c] : counts) {
    sums[source] += c;
    total += c;
  }
  MetricsReport report;
  for (const auto &[source, c] : sums) {
    report.per_source.emplace(source, ComputeMetrics(c));
  }
  report.combined = ComputeMetrics(total);
  return report;
}

std::vector<std::pair<std::string, ConfusionCounts>> ScoreCorpus(
    const std::vector<LabeledSentence> &labels,
    const std::vector<SentenceExtractions> &extractions) {
  std::map<int, const SentenceExtractions *> by_num;
  for (const SentenceExtractions &record : extractions) {
    by_num.emplace(record.sentence_num, &record);
  }

  std::vector<std::pair<std::string, ConfusionCounts>> scored;
  for (const LabeledSentence &label : labels) {
    const std::string source = label.source.empty() ? "all" : label.source;
    const SentenceExtractions *record = nullptr;
    if (auto it = by_num.find(label.sentence_num); it != by_num.end()) {
      record = it->second;
    }
    const size_t available = record ? record->measurements.size() : 0;
    std::vector<bool> used(available, false);

    for (const LabeledMeasurement &m : label.measurements) {
      const Extraction *match = nullptr;
      for (size_t i = 0; i < available && !match; ++i) {
        const Extraction &e = record->measurements[i];
        if (!used[i] && e.span.raw_value == m.number &&
            e.span.raw_unit_name == m.unit) {
          used[i] = true;
          match = &e;
        }
      }
      static const std::vector<RelatedWord> kNone;
      scored.emplace_back(source,
                          ScoreSentence(match ? match->related : kNone,
                                        m.related));
    }
    for (size_t i = 0; i < available; ++i) {
      if (!used[i]) {
        scored.emplace_back(
            source, ScoreSentence(record->measurements[i].related, {}));
      }
    }
  }
  return scored;
}

void RestoreDescriptorRelations(SentenceExtractions &record,
                                const Sentence &sentence) {
  const SentenceGraph graph(sentence);
  auto restore = [&](TokenIndex head, std::vector<Descriptor> &descriptors,
                     const std::set<std::string, std::less<>> &deps) {
    if (head < 1 || head > graph.node_count()) return;
    for (Descriptor &d : descriptors) {
      for (const Incidence &inc : graph.IncidentEdges(head)) {
        const Edge &edge = graph.edge(inc.edge);
        if (inc.neighbor == d.token_index && edge.head == head &&
            deps.contains(edge.base_type)) {
          d.relation = edge.base_type;
          break;
        }
      }
    }
  };
  for (Extraction &e : record.measurements) {
    restore(e.span.value_token, e.modifiers, kValueModifierDeps);
    for (RelatedWord &word : e.related) {
      restore(word.token_index, word.descriptors, kDescriptorDeps);
    }
  }
}

std::vector<LabeledSentence> LabelsFromExtractions(
    const std::vector<SentenceExtractions> &extractions) {
  std::vector<LabeledSentence> labels;
  for (const SentenceExtractions &record : extractions) {
    LabeledSentence label;
    label.sentence_num = record.sentence_num;
    label.sentence = record.sentence;
    for (const Extraction &e : record.measurements) {
      LabeledMeasurement m;
      m.number = e.span.raw_value;
      m.unit = e.span.raw_unit_name;
      for (const RelatedWord &word : e.related) {
        LabeledEntity entity{word.raw_name, {}};
        for (const Descriptor &d : word.descriptors) {
          entity.descriptors.push_back(d.raw_name);
        }
        m.related.push_back(std::move(entity));
      }
      label.measurements.push_back(std::move(m));
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace mctx
