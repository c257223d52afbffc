#include "anime/io.hpp"

#include <filesystem>
#include <fstream>

#include "anime/dag_feature.hpp"
#include "anime/flat_feature.hpp"
#include "anime/hre_feature.hpp"
#include "anime/ip_prefix_feature.hpp"
#include "anime/range_feature.hpp"
#include "anime/tbv_feature.hpp"
#include "anime/tuple_feature.hpp"

namespace anime::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw UsageError(what); }

const json& need(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) bad(std::string("feature config is missing '") + key + "'");
    return *it;
}

std::string need_string(const json& doc, const char* key) {
    const json& v = need(doc, key);
    if (!v.is_string()) bad(std::string("feature config field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

std::shared_ptr<const Feature> feature_from_json(const json& doc) {
    if (!doc.is_object()) bad("feature config must be an object");
    std::string kind = need_string(doc, "kind");
    std::string name = need_string(doc, "name");

    if (kind == "dag") {
        const json& nodes = need(doc, "nodes");
        const json& edges = need(doc, "edges");
        if (!nodes.is_array() || !edges.is_array()) bad("dag config needs node and edge arrays");
        std::vector<std::string> names;
        std::vector<std::pair<std::string, double>> declared;
        for (const json& n : nodes) {
            if (n.is_string()) {
                names.push_back(n.get<std::string>());
            } else if (n.is_object()) {
                std::string nm = need_string(n, "name");
                names.push_back(nm);
                if (auto it = n.find("cost"); it != n.end())
                    declared.emplace_back(nm, it->get<double>());
            } else {
                bad("dag node entries must be strings or objects");
            }
        }
        std::vector<DagFeature::Edge> edge_list;
        for (const json& e : edges) {
            if (!e.is_array() || e.size() != 2) bad("dag edges must be [parent, child] pairs");
            edge_list.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        auto feature = std::make_shared<DagFeature>(name, names, edge_list);
        for (const auto& [nm, c] : declared) {
            double actual = feature->cost(feature->label(nm));
            if (actual != c)
                bad("declared cost " + std::to_string(c) + " for '" + nm +
                    "' does not match |sigma| = " + std::to_string(actual));
        }
        return feature;
    }
    if (kind == "flat") {
        const json& values = need(doc, "values");
        if (!values.is_array()) bad("flat config needs a value array");
        std::vector<std::string> vals;
        for (const json& v : values) vals.push_back(v.get<std::string>());
        return std::make_shared<FlatFeature>(name, std::move(vals));
    }
    if (kind == "tbv") {
        return std::make_shared<TbvFeature>(name, need(doc, "width").get<uint32_t>());
    }
    if (kind == "ipprefix") {
        return std::make_shared<IpPrefixFeature>(name);
    }
    if (kind == "range") {
        return std::make_shared<RangeFeature>(name, need(doc, "min").get<int64_t>(),
                                              need(doc, "max").get<int64_t>());
    }
    if (kind == "tuple") {
        const json& comps = need(doc, "components");
        if (!comps.is_array() || comps.empty()) bad("tuple config needs components");
        std::vector<TupleFeature::Component> components;
        for (const json& c : comps)
            components.push_back({need_string(c, "name"), feature_from_json(c)});
        return std::make_shared<TupleFeature>(name, std::move(components));
    }
    if (kind == "hre") {
        auto base = feature_from_json(need(doc, "base"));
        if (base->kind() != FeatureKind::Dag && base->kind() != FeatureKind::Flat)
            bad("hre base must be a dag or flat feature (its labels need dot-free names)");
        return std::make_shared<HreFeature>(name, std::move(base),
                                            need(doc, "d").get<uint32_t>());
    }
    bad("unknown feature kind '" + kind + "'");
}

json feature_to_json(const Feature& feature) {
    json doc;
    doc["kind"] = to_string(feature.kind());
    doc["name"] = feature.name();
    switch (feature.kind()) {
        case FeatureKind::Dag: {
            const auto& f = dynamic_cast<const DagFeature&>(feature);
            json nodes = json::array();
            for (uint32_t i = 0; i < f.node_count(); ++i) {
                json n;
                n["name"] = f.node_name(i);
                n["cost"] = f.cost(f.label_at(i));
                nodes.push_back(std::move(n));
            }
            doc["nodes"] = std::move(nodes);
            json edges = json::array();
            for (const auto& [p, c] : f.edges()) edges.push_back(json::array({p, c}));
            doc["edges"] = std::move(edges);
            break;
        }
        case FeatureKind::Flat: {
            const auto& f = dynamic_cast<const FlatFeature&>(feature);
            doc["values"] = f.values();
            break;
        }
        case FeatureKind::Tbv: {
            doc["width"] = dynamic_cast<const TbvFeature&>(feature).width();
            break;
        }
        case FeatureKind::IpPrefix:
            break;
        case FeatureKind::Range: {
            const auto& f = dynamic_cast<const RangeFeature&>(feature);
            doc["min"] = f.domain_lo();
            doc["max"] = f.domain_hi();
            break;
        }
        case FeatureKind::Tuple: {
            const auto& f = dynamic_cast<const TupleFeature&>(feature);
            json comps = json::array();
            for (const auto& c : f.components()) {
                json cj = feature_to_json(*c.feature);
                cj["name"] = c.name;
                comps.push_back(std::move(cj));
            }
            doc["components"] = std::move(comps);
            break;
        }
        case FeatureKind::Hre: {
            const auto& f = dynamic_cast<const HreFeature&>(feature);
            doc["d"] = f.bound();
            doc["base"] = feature_to_json(f.base());
            break;
        }
    }
    return doc;
}

std::shared_ptr<const Feature> load_feature(const std::string& file) {
    std::ifstream in(file);
    if (!in) bad("cannot open feature config '" + file + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        bad("feature config '" + file + "' is not valid JSON: " + e.what());
    }
    return feature_from_json(doc);
}

void save_feature(const std::string& file, const Feature& feature) {
    std::ofstream out(file);
    if (!out) bad("cannot write feature config '" + file + "'");
    out << feature_to_json(feature).dump(2) << "\n";
}

json label_to_json(const Label& l) {
    if (l.feature == nullptr) bad("label without a feature");
    if (l.feature->kind() == FeatureKind::Tuple) {
        const auto& f = dynamic_cast<const TupleFeature&>(*l.feature);
        const auto& v = std::get<TupleValue>(l.value);
        json arr = json::array();
        for (size_t i = 0; i < v.parts.size(); ++i) arr.push_back(label_to_json(v.parts[i]));
        (void)f;
        return arr;
    }
    return l.feature->print_text(l);
}

Label label_from_json(const Feature& feature, const json& form) {
    if (feature.kind() == FeatureKind::Tuple) {
        const auto& f = dynamic_cast<const TupleFeature&>(feature);
        std::vector<Label> parts;
        parts.reserve(f.arity());
        if (form.is_array()) {
            if (form.size() != f.arity()) bad("tuple form has the wrong arity");
            for (size_t i = 0; i < f.arity(); ++i)
                parts.push_back(label_from_json(*f.components()[i].feature, form[i]));
        } else if (form.is_object()) {
            for (const auto& c : f.components()) {
                auto it = form.find(c.name);
                if (it == form.end()) bad("tuple form is missing component '" + c.name + "'");
                parts.push_back(label_from_json(*c.feature, *it));
            }
        } else {
            bad("tuple form must be an array or an object");
        }
        return f.label(std::move(parts));
    }
    if (feature.kind() == FeatureKind::Hre && form.is_array()) {
        const auto& f = dynamic_cast<const HreFeature&>(feature);
        std::vector<Label> tokens;
        tokens.reserve(form.size());
        for (const json& t : form) tokens.push_back(f.base().parse_text(t.get<std::string>()));
        return f.string_label(tokens);
    }
    if (!form.is_string()) bad("label form must be a string");
    return feature.parse_text(form.get<std::string>());
}

json path_record_to_json(const Label& l) {
    if (l.feature == nullptr) bad("label without a feature");
    if (l.feature->kind() == FeatureKind::Tuple) {
        const auto& f = dynamic_cast<const TupleFeature&>(*l.feature);
        const auto& v = std::get<TupleValue>(l.value);
        json obj = json::object();
        for (size_t i = 0; i < v.parts.size(); ++i)
            obj[f.components()[i].name] = path_record_to_json(v.parts[i]);
        return obj;
    }
    if (l.feature->kind() == FeatureKind::Hre) {
        const auto& f = dynamic_cast<const HreFeature&>(*l.feature);
        json arr = json::array();
        for (const HreElement& e : f.elements_of(l)) {
            if (e.plus) bad("path records must be concrete (no '+')");
            arr.push_back(f.base().print_text(e.label));
        }
        return arr;
    }
    return l.feature->print_text(l);
}

Label path_record_from_json(const Feature& feature, const json& record) {
    return label_from_json(feature, record);
}

std::vector<Path> load_paths_jsonl(const std::string& file, const Feature& feature) {
    std::ifstream in(file);
    if (!in) bad("cannot open path file '" + file + "'");
    std::vector<Path> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            bad(file + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        out.emplace_back(path_record_from_json(feature, rec));
    }
    return out;
}

void save_paths_jsonl(const std::string& file, std::span<const Path> paths) {
    std::ofstream out(file);
    if (!out) bad("cannot write path file '" + file + "'");
    for (const Path& p : paths) out << path_record_to_json(p.label()).dump() << "\n";
}

std::vector<Intent> load_intents_jsonl(const std::string& file, const Feature& feature) {
    std::ifstream in(file);
    if (!in) bad("cannot open intents file '" + file + "'");
    std::vector<Intent> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            bad(file + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        const json& form = rec.is_object() ? need(rec, "intent") : rec;
        out.emplace_back(label_from_json(feature, form));
    }
    return out;
}

void save_intents_jsonl(const std::string& file, std::span<const IntentRecord> records) {
    std::ofstream out(file);
    if (!out) bad("cannot write intents file '" + file + "'");
    for (const IntentRecord& r : records) {
        json rec;
        rec["intent"] = label_to_json(r.intent.label());
        rec["members"] = r.members;
        rec["cost"] = r.cost;
        out << rec.dump() << "\n";
    }
}

std::vector<Intent> load_truth(const std::string& file, const Feature& feature) {
    std::ifstream in(file);
    if (!in) bad("cannot open truth file '" + file + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        bad("truth file '" + file + "' is not valid JSON: " + e.what());
    }
    std::vector<Intent> out;
    for (const json& form : need(doc, "intents"))
        out.emplace_back(label_from_json(feature, form));
    return out;
}

void save_truth(const std::string& file, std::span<const Intent> intents) {
    json doc;
    json arr = json::array();
    for (const Intent& i : intents) arr.push_back(label_to_json(i.label()));
    doc["intents"] = std::move(arr);
    std::ofstream out(file);
    if (!out) bad("cannot write truth file '" + file + "'");
    out << doc.dump(2) << "\n";
}

json report_to_json(const EvalReport& report) {
    json doc;
    doc["tp"] = report.tp;
    doc["fn"] = report.fn_;
    doc["fp"] = report.fp;
    doc["fp_exact"] = report.fp_exact;
    doc["precision"] = report.precision;
    doc["recall"] = report.recall;
    doc["f_score"] = report.f_score;
    json per = json::array();
    for (const PerIntentStat& s : report.per_intent) {
        json row;
        row["intent"] = label_to_json(s.intent);
        row["reference_covered"] = s.reference_covered;
        row["sigma_size"] = s.sigma_size;
        row["sigma_exact"] = s.sigma_exact;
        per.push_back(std::move(row));
    }
    doc["per_intent"] = std::move(per);
    return doc;
}

void save_dataset(const std::string& dir, const GeneratedDataset& ds) {
    std::filesystem::create_directories(dir);
    auto at = [&](const char* f) { return (std::filesystem::path(dir) / f).string(); };
    save_paths_jsonl(at("paths.jsonl"), ds.observed);
    save_paths_jsonl(at("possible.jsonl"), ds.possible);
    save_feature(at("feature.json"), *ds.feature);
    save_truth(at("truth.json"), ds.truth);
    if (ds.alt_feature) save_feature(at("feature_flat.json"), *ds.alt_feature);
}

std::string trace_line(const MergeRecord& rec) {
    json form = label_to_json(rec.representative);
    std::string rep = form.is_string() ? form.get<std::string>() : form.dump();
    return "step=" + std::to_string(rec.step) + " merged=" + std::to_string(rec.merged_a) +
           "," + std::to_string(rec.merged_b) + " into=" + std::to_string(rec.into) +
           " distance=" + std::to_string(rec.distance) + " rep=" + rep;
}

}  // namespace anime::io
