// anime: infer high-level network intents from observed forwarding behavior.
//
// Subcommands: generate (synthetic datasets), infer (intent mining),
// eval (precision/recall scoring), sweep (CSV over k and seeds).

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anime/datasets.hpp"
#include "anime/inference.hpp"
#include "anime/io.hpp"
#include "anime/metrics.hpp"

namespace {

using namespace anime;

struct GenerateCommon {
    std::string out_dir;
    uint64_t seed = 0;
    double rate = 1.0;
};

void write_generated(const GenerateCommon& common, GeneratedDataset ds) {
    if (common.rate < 1.0) ds = observe_subset(ds, common.rate, common.seed ^ 0x5eedULL);
    io::save_dataset(common.out_dir, ds);
    std::cout << "wrote " << ds.observed.size() << " observed / " << ds.possible.size()
              << " possible paths to " << common.out_dir << "\n";
}

struct SweepRow {
    size_t k = 0;
    uint64_t seed = 0;
    EvalReport report;
    double runtime_ms = 0.0;
};

SweepRow run_cell(const std::vector<Path>& paths, const Feature& feature,
                  const ReferenceSet& reference, size_t k, size_t b, uint64_t seed) {
    InferenceConfig config;
    config.k = k;
    config.b = b;
    config.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    InferenceResult result = infer(paths, feature, config);
    auto t1 = std::chrono::steady_clock::now();
    SweepRow row;
    row.k = k;
    row.seed = seed;
    row.report = evaluate(result.intents, reference);
    row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

int run(int argc, char** argv) {
    CLI::App app{"anime: mine high-level intents from forwarding behavior"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "produce a synthetic dataset");
    gen->require_subcommand(1);
    GenerateCommon common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out-dir", common.out_dir, "output directory")->required();
        cmd->add_option("--seed", common.seed, "generator seed")->required();
        cmd->add_option("--rate", common.rate,
                        "fraction of the observed paths to keep (default 1.0)")
            ->check(CLI::Range(1e-9, 1.0));
    };

    AccessControlSpec ac;
    auto* gen_ac = gen->add_subcommand("access-control", "server/group reachability pairs");
    gen_ac->add_option("--n", ac.n, "server count");
    gen_ac->add_option("--g", ac.g, "group count");
    gen_ac->add_option("--min", ac.min_size, "minimum group size");
    gen_ac->add_option("--max", ac.max_size, "maximum group size");
    gen_ac->add_option("--m", ac.m, "generating intent count");
    add_common(gen_ac);

    IspSpec isp;
    auto* gen_isp = gen->add_subcommand("isp", "(organization, ingress, egress) records");
    gen_isp->add_option("--nodes", isp.nodes, "device count");
    gen_isp->add_option("--egresses", isp.egresses, "egress device count");
    gen_isp->add_option("--destinations", isp.destinations, "organization count");
    add_common(gen_isp);

    FatTreeSpec ft;
    auto* gen_ft = gen->add_subcommand("fattree", "data-center paths as an HRE dataset");
    gen_ft->add_option("--c", ft.c, "clusters (cluster 1 is the DMZ)");
    gen_ft->add_option("--f", ft.f, "firewalls per cluster");
    gen_ft->add_option("--p", ft.p, "spines per cluster");
    gen_ft->add_option("--l", ft.l, "leaves per cluster");
    gen_ft->add_option("--r", ft.r, "racks per leaf");
    gen_ft->add_option("--s", ft.s, "servers per rack");
    gen_ft->add_option("--g", ft.g, "shared gateways");
    gen_ft->add_option("--i", ft.i, "ISPs");
    gen_ft->add_option("--d", ft.d, "HRE length bound");
    add_common(gen_ft);

    // ---- infer ----
    auto* inf = app.add_subcommand("infer", "infer at most k intents from observed paths");
    std::string paths_file, feature_file, out_file;
    size_t opt_k = 1, opt_b = 0;
    uint64_t opt_seed = 0;
    bool opt_trace = false;
    inf->add_option("--paths", paths_file, "observed paths (jsonl)")->required();
    inf->add_option("--feature", feature_file, "feature config (json)")->required();
    inf->add_option("--k", opt_k, "maximum number of intents")->required();
    inf->add_option("--b", opt_b, "batch size; 0 samples every live cluster")->required();
    inf->add_option("--seed", opt_seed, "sampling seed")->required();
    inf->add_flag("--trace", opt_trace, "print one line per merge");
    inf->add_option("--out", out_file, "intents output (jsonl)")->required();

    // ---- eval ----
    auto* ev = app.add_subcommand("eval", "score an intent set against a reference");
    std::string intents_file, reference_file, report_file;
    ev->add_option("--intents", intents_file, "intents (jsonl)")->required();
    ev->add_option("--reference", reference_file, "reference paths (jsonl)")->required();
    ev->add_option("--feature", feature_file, "feature config (json)")->required();
    ev->add_option("--out", report_file, "report output (json)");

    // ---- sweep ----
    auto* sw = app.add_subcommand("sweep", "evaluate a k range across seeds into a CSV");
    size_t k_min = 1, k_max = 1, k_step = 1;
    std::vector<uint64_t> seeds;
    std::string csv_file;
    sw->add_option("--paths", paths_file, "observed paths (jsonl)")->required();
    sw->add_option("--reference", reference_file, "reference paths (jsonl)")->required();
    sw->add_option("--feature", feature_file, "feature config (json)")->required();
    sw->add_option("--k-min", k_min, "smallest k")->required();
    sw->add_option("--k-max", k_max, "largest k")->required();
    sw->add_option("--k-step", k_step, "k increment (default 1)");
    sw->add_option("--b", opt_b, "batch size; 0 samples every live cluster")->required();
    sw->add_option("--seeds", seeds, "comma-separated seeds")->required()->delimiter(',');
    sw->add_option("--csv", csv_file, "CSV output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (gen_ac->parsed()) {
        ac.seed = common.seed;
        write_generated(common, gen_access_control(ac));
        return 0;
    }
    if (gen_isp->parsed()) {
        isp.seed = common.seed;
        write_generated(common, anime::gen_isp(isp));
        return 0;
    }
    if (gen_ft->parsed()) {
        ft.seed = common.seed;
        write_generated(common, gen_fattree(ft));
        return 0;
    }

    if (inf->parsed()) {
        auto feature = io::load_feature(feature_file);
        std::vector<Path> paths = io::load_paths_jsonl(paths_file, *feature);
        if (paths.empty()) throw UsageError("no paths in '" + paths_file + "'");
        if (opt_k == 0) throw UsageError("k must be >= 1");

        InferenceConfig config;
        config.k = opt_k;
        config.b = opt_b;
        config.seed = opt_seed;
        config.keep_trace = opt_trace;
        InferenceResult result = infer(paths, *feature, config);

        if (opt_trace)
            for (const MergeRecord& rec : result.trace) std::cout << io::trace_line(rec) << "\n";

        std::vector<size_t> members(result.intents.size(), 0);
        for (size_t idx : result.assignments) ++members[idx];
        std::vector<io::IntentRecord> records;
        records.reserve(result.intents.size());
        for (size_t i = 0; i < result.intents.size(); ++i) {
            const Intent& intent = result.intents.intents()[i];
            records.push_back({intent, members[i], cost(intent.label())});
        }
        io::save_intents_jsonl(out_file, records);
        std::cout << "inferred " << result.intents.size() << " intents, total cost "
                  << result.total_cost << "\n";
        return 0;
    }

    if (ev->parsed()) {
        auto feature = io::load_feature(feature_file);
        std::vector<Intent> intents = io::load_intents_jsonl(intents_file, *feature);
        std::vector<Path> ref_paths = io::load_paths_jsonl(reference_file, *feature);
        IntentSet set(intents, std::max<size_t>(intents.size(), 1));
        EvalReport report = evaluate(set, ReferenceSet(std::move(ref_paths)));
        if (!report_file.empty()) {
            std::ofstream out(report_file);
            if (!out) throw UsageError("cannot write report '" + report_file + "'");
            out << io::report_to_json(report).dump(2) << "\n";
        }
        std::cout << "precision=" << report.precision << ", recall=" << report.recall
                  << ", f=" << report.f_score << "\n";
        return 0;
    }

    if (sw->parsed()) {
        if (k_min > k_max) throw UsageError("k-min must not exceed k-max");
        if (k_step == 0) throw UsageError("k-step must be >= 1");
        auto feature = io::load_feature(feature_file);
        std::vector<Path> paths = io::load_paths_jsonl(paths_file, *feature);
        if (paths.empty()) throw UsageError("no paths in '" + paths_file + "'");
        ReferenceSet reference(io::load_paths_jsonl(reference_file, *feature));

        std::ofstream out(csv_file);
        if (!out) throw UsageError("cannot write CSV '" + csv_file + "'");
        out << "k,seed,tp,fn,fp,fp_exact,precision,recall,f_score,runtime_ms\n";
        for (size_t k = k_min; k <= k_max; k += k_step) {
            for (uint64_t seed : seeds) {
                SweepRow row = run_cell(paths, *feature, reference, k, opt_b, seed);
                out << row.k << "," << row.seed << "," << row.report.tp << ","
                    << row.report.fn_ << "," << row.report.fp << ","
                    << (row.report.fp_exact ? 1 : 0) << "," << row.report.precision << ","
                    << row.report.recall << "," << row.report.f_score << ","
                    << row.runtime_ms << "\n";
            }
        }
        std::cout << "wrote " << csv_file << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const anime::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const anime::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
