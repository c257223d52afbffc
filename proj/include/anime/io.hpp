#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "anime/datasets.hpp"
#include "anime/feature.hpp"
#include "anime/inference.hpp"
#include "anime/metrics.hpp"

namespace anime::io {

using json = nlohmann::json;

// ---- feature configuration ------------------------------------------------------
//
// One document per feature tree. kind selects the shape:
//   dag:      {"kind":"dag","name":..,"nodes":[{"name":..,"cost":<optional>},..],
//              "edges":[[parent,child],..]}
//   flat:     {"kind":"flat","name":..,"values":[..]}
//   tbv:      {"kind":"tbv","name":..,"width":N}
//   ipprefix: {"kind":"ipprefix","name":..}
//   range:    {"kind":"range","name":..,"min":L,"max":H}
//   tuple:    {"kind":"tuple","name":..,"components":[<feature>..]}
//   hre:      {"kind":"hre","name":..,"d":N,"base":<feature>}
// Declared dag costs are checked against the derived |sigma| values.
std::shared_ptr<const Feature> feature_from_json(const json& doc);
json feature_to_json(const Feature& feature);

std::shared_ptr<const Feature> load_feature(const std::string& file);
void save_feature(const std::string& file, const Feature& feature);

// ---- label forms ------------------------------------------------------------------
//
// Canonical form: text for scalar kinds, array of component forms for tuples,
// dot-joined text (elements suffixed with '+') for hre.
json label_to_json(const Label& l);
Label label_from_json(const Feature& feature, const json& form);

// Path records additionally accept tuple objects keyed by component name and
// hre token arrays; that is also how they are written.
json path_record_to_json(const Label& l);
Label path_record_from_json(const Feature& feature, const json& record);

// ---- files ------------------------------------------------------------------------

std::vector<Path> load_paths_jsonl(const std::string& file, const Feature& feature);
void save_paths_jsonl(const std::string& file, std::span<const Path> paths);

struct IntentRecord {
    Intent intent;
    uint64_t members = 0;
    double cost = 0.0;
};
std::vector<Intent> load_intents_jsonl(const std::string& file, const Feature& feature);
void save_intents_jsonl(const std::string& file, std::span<const IntentRecord> records);

std::vector<Intent> load_truth(const std::string& file, const Feature& feature);
void save_truth(const std::string& file, std::span<const Intent> intents);

json report_to_json(const EvalReport& report);

// Writes paths.jsonl, possible.jsonl, feature.json, truth.json (and
// feature_flat.json when the dataset carries a flat variant) under dir.
void save_dataset(const std::string& dir, const GeneratedDataset& ds);

std::string trace_line(const MergeRecord& rec);

}  // namespace anime::io
