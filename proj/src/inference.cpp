#include "anime/inference.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "anime/detail/rng.hpp"

namespace anime {

MergeCandidate cluster_distance(const Cluster& a, const Cluster& b, const Feature& feature) {
    if (a.id == b.id) throw UsageError("cluster distance of a cluster with itself");
    MergeCandidate c;
    c.cluster_a = a.id;
    c.cluster_b = b.id;
    c.joined = feature.join(a.representative, b.representative);
    c.distance = feature.cost(c.joined) - (a.rep_cost + b.rep_cost);
    return c;
}

Intent single_intent(std::span<const Path> paths, const Feature& feature) {
    if (paths.empty()) throw UsageError("single_intent requires at least one path");
    std::vector<Label> labels;
    labels.reserve(paths.size());
    for (const Path& p : paths) {
        if (p.label().feature != &feature)
            throw UsageError("path does not belong to the given feature");
        labels.push_back(p.label());
    }
    return Intent(join_all(labels));
}

namespace {

struct QueueEntry {
    double distance;
    double joined_cost;
    uint64_t id_min;
    uint64_t id_max;
    Label joined;
};

// Min-queue order: (distance, joined cost, ids).
struct QueueCompare {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.distance != b.distance) return a.distance > b.distance;
        if (a.joined_cost != b.joined_cost) return a.joined_cost > b.joined_cost;
        if (a.id_min != b.id_min) return a.id_min > b.id_min;
        return a.id_max > b.id_max;
    }
};

struct LabelPairHash {
    size_t operator()(const std::pair<Label, Label>& p) const {
        size_t h = hash_value(p.first);
        return h ^ (hash_value(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

class Engine {
public:
    Engine(std::span<const Path> paths, const Feature& feature, const InferenceConfig& config)
        : feature_(feature), config_(config), rng_(config.seed) {
        if (paths.empty()) throw UsageError("infer requires a non-empty path set");
        if (config_.k == 0) throw UsageError("k must be positive");

        // Duplicates would distort distance sampling; collapse them up front.
        std::map<Label, size_t> seen;
        path_to_distinct_.reserve(paths.size());
        for (const Path& p : paths) {
            if (p.label().feature != &feature_)
                throw UsageError("path does not belong to the given feature");
            auto [it, fresh] = seen.emplace(p.label(), distinct_.size());
            if (fresh) distinct_.push_back(p.label());
            path_to_distinct_.push_back(it->second);
        }
    }

    InferenceResult run() {
        for (size_t i = 0; i < distinct_.size(); ++i) {
            Cluster c;
            c.id = next_id_++;
            c.members = {i};
            c.representative = distinct_[i];
            c.rep_cost = feature_.cost(c.representative);
            live_order_.push_back(c.id);
            clusters_.emplace(c.id, std::move(c));
        }
        for (uint64_t id : std::vector<uint64_t>(live_order_)) enqueue_batch(id);

        size_t step = 0;
        while (true) {
            if (live_order_.size() <= 1) break;
            bool need_merge = live_order_.size() > config_.k;
            if (!need_merge && !config_.merge_nonpositive) break;

            auto cand = pop_valid();
            if (!cand) {
                if (!need_merge) break;
                resample_all();
                continue;
            }
            if (!need_merge && cand->distance > 0.0) break;
            merge(*cand, ++step);
        }
        return finish();
    }

private:
    void enqueue_batch(uint64_t id) {
        size_t live = live_order_.size();
        if (live <= 1) return;
        size_t want = config_.b == 0 ? live - 1 : std::min(config_.b, live - 1);

        // Positions of partners within live_order_, excluding the cluster itself.
        size_t self_pos = position_of(id);
        std::vector<size_t> picks;
        if (want >= live - 1) {
            picks.reserve(live - 1);
            for (size_t p = 0; p < live; ++p)
                if (p != self_pos) picks.push_back(p);
        } else {
            picks = rng_.sample_indices(live - 1, want);
            for (size_t& p : picks)
                if (p >= self_pos) ++p;
        }
        const Cluster& self = clusters_.at(id);
        for (size_t p : picks) push_candidate(self, clusters_.at(live_order_[p]));
    }

    size_t position_of(uint64_t id) const {
        for (size_t p = 0; p < live_order_.size(); ++p)
            if (live_order_[p] == id) return p;
        throw InternalError("cluster id not live");
    }

    void push_candidate(const Cluster& a, const Cluster& b) {
        auto key = a.representative < b.representative
                       ? std::pair{a.representative, b.representative}
                       : std::pair{b.representative, a.representative};
        Label joined;
        if (auto it = join_cache_.find(key); it != join_cache_.end()) {
            joined = it->second;
        } else {
            joined = feature_.join(a.representative, b.representative);
            ++stats_.join_calls;
            join_cache_.emplace(key, joined);
        }
        double joined_cost = cost_of(joined);
        QueueEntry e{joined_cost - (a.rep_cost + b.rep_cost), joined_cost, std::min(a.id, b.id),
                     std::max(a.id, b.id), std::move(joined)};
        queue_.push(std::move(e));
        ++stats_.queue_pushes;
    }

    double cost_of(const Label& l) {
        auto [it, fresh] = cost_cache_.try_emplace(l, 0.0);
        if (fresh) it->second = feature_.cost(l);
        return it->second;
    }

    std::optional<QueueEntry> pop_valid() {
        while (!queue_.empty()) {
            QueueEntry e = queue_.top();
            queue_.pop();
            ++stats_.queue_pops;
            if (clusters_.contains(e.id_min) && clusters_.contains(e.id_max)) return e;
        }
        return std::nullopt;
    }

    void resample_all() {
        ++stats_.resample_rounds;
        for (uint64_t id : std::vector<uint64_t>(live_order_)) enqueue_batch(id);
    }

    void merge(const QueueEntry& e, size_t step) {
        Cluster& a = clusters_.at(e.id_min);
        Cluster& b = clusters_.at(e.id_max);
        Cluster merged;
        merged.id = next_id_++;
        merged.members.reserve(a.members.size() + b.members.size());
        std::merge(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::back_inserter(merged.members));
        merged.representative = e.joined;
        merged.rep_cost = cost_of(e.joined);

        live_order_.erase(std::remove_if(live_order_.begin(), live_order_.end(),
                                         [&](uint64_t id) {
                                             return id == e.id_min || id == e.id_max;
                                         }),
                          live_order_.end());
        clusters_.erase(e.id_min);
        clusters_.erase(e.id_max);
        uint64_t new_id = merged.id;
        live_order_.push_back(new_id);
        clusters_.emplace(new_id, std::move(merged));

        if (config_.keep_trace)
            trace_.push_back(MergeRecord{step, e.id_min, e.id_max, new_id, e.distance,
                                         clusters_.at(new_id).representative,
                                         live_order_.size()});
        enqueue_batch(new_id);
    }

    InferenceResult finish() {
        // One intent per final cluster, ordered by first appearance of a member.
        std::vector<uint64_t> final_ids(live_order_);
        std::sort(final_ids.begin(), final_ids.end(), [&](uint64_t x, uint64_t y) {
            return clusters_.at(x).members.front() < clusters_.at(y).members.front();
        });

        std::vector<Intent> intents;
        intents.reserve(final_ids.size());
        std::vector<size_t> distinct_to_intent(distinct_.size());
        double total_cost = 0.0;
        for (size_t slot = 0; slot < final_ids.size(); ++slot) {
            const Cluster& c = clusters_.at(final_ids[slot]);
            intents.emplace_back(c.representative);
            total_cost += c.rep_cost;
            for (size_t m : c.members) distinct_to_intent[m] = slot;
        }

        std::vector<size_t> assignments;
        assignments.reserve(path_to_distinct_.size());
        for (size_t d : path_to_distinct_) assignments.push_back(distinct_to_intent[d]);

        return InferenceResult{IntentSet(std::move(intents), config_.k),
                               std::move(assignments), total_cost, std::move(trace_), stats_};
    }

    const Feature& feature_;
    InferenceConfig config_;
    detail::Rng rng_;

    std::vector<Label> distinct_;
    std::vector<size_t> path_to_distinct_;

    uint64_t next_id_ = 0;
    std::unordered_map<uint64_t, Cluster> clusters_;
    std::vector<uint64_t> live_order_;  // insertion order; sampling frame
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCompare> queue_;
    std::unordered_map<std::pair<Label, Label>, Label, LabelPairHash> join_cache_;
    std::unordered_map<Label, double> cost_cache_;
    std::vector<MergeRecord> trace_;
    InferenceStats stats_;
};

}  // namespace

InferenceResult infer(std::span<const Path> paths, const Feature& feature,
                      const InferenceConfig& config) {
    return Engine(paths, feature, config).run();
}

}  // namespace anime
