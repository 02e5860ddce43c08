// Copyright 2026 The mrcheck Authors.
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

#include "mrcheck/report.h"

#include "absl/strings/str_format.h"
#include "json.hpp"

namespace mrcheck {
namespace {

using Json = nlohmann::ordered_json;

std::string Written(const Schema& schema, const std::string& attribute) {
  const AttributeSpec* spec = schema.Find(attribute);
  return spec ? spec->written_form : attribute;
}

Json SerBlock(const SerReport& r) {
  Json j;
  j["instances"] = r.per_instance.size();
  j["slots"] = r.total_slots;
  j["added"] = r.total_added;
  j["missing"] = r.total_missing;
  j["wrong"] = r.total_wrong;
  j["ser_micro"] = r.micro_ser;
  j["ser_macro"] = r.macro_ser;
  j["add_rate"] = r.add_rate;
  j["miss_rate"] = r.miss_rate;
  j["wrong_rate"] = r.wrong_rate;
  j["inst_ok"] = r.inst_ok;
  return j;
}

Json DetectionJson(const Schema& schema, const Detection& d) {
  return Json{{"attribute", Written(schema, d.attribute)},
              {"value_class", d.value_class},
              {"surface", d.surface},
              {"span", {d.span.begin, d.span.end}},
              {"rule", d.rule_id}};
}

Json DiffJson(const Schema& schema, const SlotDiff& diff) {
  Json added = Json::array();
  for (const Detection& d : diff.added) {
    added.push_back({{"attribute", Written(schema, d.attribute)},
                     {"value", d.surface}});
  }
  Json missing = Json::array();
  for (const SlotValue& s : diff.missing) {
    missing.push_back({{"attribute", Written(schema, s.attribute)},
                       {"value", s.value}});
  }
  Json wrong = Json::array();
  for (const WrongValue& w : diff.wrong) {
    wrong.push_back({{"attribute", Written(schema, w.expected.attribute)},
                     {"expected", w.expected.value},
                     {"detected", w.detected.surface}});
  }
  return Json{{"added", added}, {"missing", missing}, {"wrong", wrong}};
}

Json ConfigJson(const MatcherConfig& config) {
  return Json{{"ignore_eattype_restaurant_omission",
               config.options().ignore_eattype_restaurant_omission}};
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string AuditReportJson(const Corpus& corpus, const CorpusAudit& audit,
                            const MatcherConfig& config) {
  const Schema& schema = config.schema();
  Json j;
  j["schema"] = kAuditSchema;
  j["corpus"] = corpus.label;
  j["options"] = ConfigJson(config);
  j["aggregate"] = SerBlock(audit.report);
  Json rows = Json::array();
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Instance& instance = corpus.instances[i];
    const InstanceAudit& a = audit.instances[i];
    Json row;
    row["row"] = instance.origin.row;
    row["mr"] = FormatMr(instance.mr, schema);
    row["reference"] = instance.reference;
    Json detected = Json::array();
    for (const Detection& d : a.detected.detections) {
      detected.push_back(DetectionJson(schema, d));
    }
    row["detected"] = detected;
    Json conflicts = Json::array();
    for (const std::string& c : a.detected.conflicts) {
      conflicts.push_back(Written(schema, c));
    }
    row["conflicts"] = conflicts;
    row["diff"] = DiffJson(schema, a.diff);
    row["errors"] = a.counts.errors();
    row["slots"] = a.counts.slots;
    row["ser"] = a.counts.ser();
    row["corrected_mr"] =
        a.corrected ? Json(FormatMr(*a.corrected, schema)) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["instances"] = std::move(rows);
  return Dump(j);
}

std::string AuditTable(const std::string& label, const SerReport& r) {
  std::string out = absl::StrFormat(
      "%-12s %9s %8s %7s %7s %7s %8s %8s %8s\n", "corpus", "instances",
      "slots", "add", "miss", "wrong", "SER", "SERmacro", "InstOK");
  absl::StrAppendFormat(&out, "%-12s %9d %8d %7d %7d %7d %7.2f%% %7.2f%% %8d\n",
                        label, r.per_instance.size(), r.total_slots,
                        r.total_added, r.total_missing, r.total_wrong,
                        100 * r.micro_ser, 100 * r.macro_ser, r.inst_ok);
  return out;
}

std::string ManifestJson(const CleanedSplits& splits, CleaningMode mode,
                         const MatcherConfig& config) {
  Json j;
  j["schema"] = kManifestSchema;
  j["variant"] = VariantLabel(mode);
  j["mode"] = std::string(CleaningModeName(mode));
  j["options"] = ConfigJson(config);
  Json rows = Json::array();
  for (const SplitManifest& m : splits.manifest) {
    rows.push_back({{"split", m.split},
                    {"distinct_mrs", m.distinct_mrs},
                    {"references", m.references},
                    {"removed_by_dedup", m.removed_by_dedup},
                    {"rejected", m.rejected},
                    {"ser_before", m.ser_before},
                    {"ser_after", m.ser_after}});
  }
  j["splits"] = std::move(rows);
  Json rejects = Json::array();
  for (const Reject& r : splits.rejects) {
    rejects.push_back({{"split", r.split},
                       {"row", r.row},
                       {"mr", r.mr},
                       {"reference", r.reference},
                       {"reason", r.reason}});
  }
  j["rejects"] = std::move(rejects);
  return Dump(j);
}

std::string ManifestTable(const CleanedSplits& splits, CleaningMode mode) {
  std::string out = absl::StrFormat("variant: %s\n", VariantLabel(mode));
  absl::StrAppendFormat(&out, "%-8s %8s %8s %8s %8s %9s %9s\n", "split",
                        "MRs", "refs", "dedup", "rejected", "SERbefore",
                        "SERafter");
  for (const SplitManifest& m : splits.manifest) {
    absl::StrAppendFormat(&out, "%-8s %8d %8d %8d %8d %8.2f%% %8.2f%%\n",
                          m.split, m.distinct_mrs, m.references,
                          m.removed_by_dedup, m.rejected, 100 * m.ser_before,
                          100 * m.ser_after);
  }
  return out;
}

std::string ScoreReportJson(const std::string& label,
                            const MetricsReport& report, const ScoredSet& set,
                            std::span<const ScoreItemInfo> items) {
  Json j;
  j["schema"] = kScoreSchema;
  j["system"] = label;
  j["metrics"] = {{"BLEU", report.bleu},       {"NIST", report.nist},
                  {"METEOR", report.meteor},   {"ROUGE-L", report.rouge_l},
                  {"CIDEr", report.cider},     {"Add", report.ser.add_rate},
                  {"Miss", report.ser.miss_rate},
                  {"Wrong", report.ser.wrong_rate},
                  {"SER", report.ser.micro_ser}};
  j["meteor_variant"] = "exact-match only";
  j["ser"] = SerBlock(report.ser);
  if (!items.empty()) {
    Json rows = Json::array();
    for (size_t i = 0; i < items.size() && i < set.items.size(); ++i) {
      rows.push_back(
          {{"mr", items[i].mr},
           {"output", items[i].output},
           {"references", set.items[i].references.size()},
           {"errors", items[i].ser.errors()},
           {"ser", items[i].ser.ser()},
           {"bleu_smoothed_diagnostic", SmoothedSentenceBleu(set.items[i])}});
    }
    j["items"] = std::move(rows);
  }
  return Dump(j);
}

std::string ScoreTable(const std::string& label, const MetricsReport& r) {
  std::string out = absl::StrFormat(
      "%-16s %7s %7s %7s %7s %7s %6s %6s %6s %6s\n", "system", "BLEU", "NIST",
      "METEOR", "ROUGE-L", "CIDEr", "Add", "Miss", "Wrong", "SER");
  absl::StrAppendFormat(
      &out, "%-16s %7.4f %7.4f %7.4f %7.4f %7.4f %6.2f %6.2f %6.2f %6.2f\n",
      label, r.bleu, r.nist, r.meteor, r.rouge_l, r.cider,
      100 * r.ser.add_rate, 100 * r.ser.miss_rate, 100 * r.ser.wrong_rate,
      100 * r.ser.micro_ser);
  return out;
}

std::string RerankReportJson(std::span<const NBestList> lists,
                             std::span<const Selection> selections,
                             const MatcherConfig& config) {
  Json j;
  j["schema"] = kRerankSchema;
  j["options"] = ConfigJson(config);
  Json rows = Json::array();
  for (size_t i = 0; i < selections.size() && i < lists.size(); ++i) {
    const Selection& s = selections[i];
    Json candidates = Json::array();
    for (size_t c = 0; c < s.candidates.size(); ++c) {
      candidates.push_back({{"rank", c},
                            {"added", s.candidates[c].added},
                            {"missing", s.candidates[c].missing},
                            {"wrong", s.candidates[c].wrong},
                            {"ser", s.candidates[c].ser()}});
    }
    rows.push_back({{"mr", FormatMr(lists[i].mr, config.schema())},
                    {"selected", s.index},
                    {"text", s.text},
                    {"candidates", std::move(candidates)}});
  }
  j["lists"] = std::move(rows);
  return Dump(j);
}

}  // namespace mrcheck
