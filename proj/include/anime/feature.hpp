#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anime/error.hpp"
#include "anime/label.hpp"

namespace anime {

enum class FeatureKind { Dag, Flat, Tbv, IpPrefix, Range, Tuple, Hre };

const char* to_string(FeatureKind kind);

// |sigma(l)| (or a union size). `exact` is false when `value` is only an upper bound.
struct SigmaCount {
    double value = 0.0;
    bool exact = true;
};

// A feature type: a universe of labels partially ordered by set inclusion, with a
// per-label cost and a total join. Immutable after construction; all operations
// are pure reads and safe to call concurrently.
class Feature {
public:
    Feature(std::string name, FeatureKind kind) : name_(std::move(name)), kind_(kind) {}
    virtual ~Feature() = default;

    Feature(const Feature&) = delete;
    Feature& operator=(const Feature&) = delete;

    const std::string& name() const { return name_; }
    FeatureKind kind() const { return kind_; }

    // Is `l` a member of this feature's universe (a structurally valid label)?
    virtual bool contains(const Label& l) const = 0;

    // Concrete labels are the leaves of the order: no other label is below them.
    virtual bool is_concrete(const Label& l) const = 0;

    // sigma(a) included in sigma(b)?
    virtual bool leq(const Label& a, const Label& b) const = 0;

    // Label cost; equals |sigma(l)| for every kind except HRE.
    virtual double cost(const Label& l) const = 0;

    // Minimal-cost label covering sigma(a) union sigma(b). Exact minimum for all
    // library kinds; best DP-reachable candidate for HRE. Total and deterministic.
    virtual Label join(const Label& a, const Label& b) const = 0;

    // The greatest element (covers every concrete label). Always present.
    virtual Label top() const = 0;

    // Materializes sigma(l); nullopt when its size would exceed `cap`, in which
    // case callers must fall back to counting-only operations.
    virtual std::optional<std::vector<Label>> sigma(const Label& l, uint64_t cap) const = 0;

    // |sigma(l)| without materialization. Exact (== cost) for non-HRE kinds.
    virtual SigmaCount sigma_count(const Label& l, uint64_t cap) const {
        (void)cap;
        return {cost(l), true};
    }

    // The whole universe, nullopt when larger than `cap`. Consumed by the brute
    // force oracles; infinite-ish universes (HRE) return nullopt.
    virtual std::optional<std::vector<Label>> universe(uint64_t cap) const {
        (void)cap;
        return std::nullopt;
    }

    // Plain-text label form, where one exists (tuples serialize structurally and
    // refuse a flat string form).
    virtual std::string print_text(const Label& l) const = 0;
    virtual Label parse_text(const std::string& text) const = 0;

protected:
    void require_mine(const Label& l) const {
        if (l.feature != this)
            throw UsageError("label does not belong to feature '" + name_ + "'");
    }

private:
    std::string name_;
    FeatureKind kind_;
};

// ---- feature-core operations ------------------------------------------------

// sigma(a) subset of sigma(b). Both labels must come from the same feature.
bool leq(const Label& a, const Label& b);

double cost(const Label& l);

Label join(const Label& a, const Label& b);

// Left fold of pairwise joins over the inputs sorted by label key.
Label join_all(std::span<const Label> labels);

std::optional<std::vector<Label>> sigma(const Label& l, uint64_t cap);

// ---- domain wrappers ----------------------------------------------------------

// A concrete (leaf) label: one observed unit of behavior.
class Path {
public:
    explicit Path(Label label);
    const Label& label() const { return label_; }

private:
    Label label_;
};

// Any label of the universe, read as the set of concrete behaviors it permits.
class Intent {
public:
    explicit Intent(Label label);
    const Label& label() const { return label_; }

private:
    Label label_;
};

// An ordered list of intents over one feature, at most k_limit long.
class IntentSet {
public:
    IntentSet(std::vector<Intent> intents, size_t k_limit);

    const std::vector<Intent>& intents() const { return intents_; }
    size_t k_limit() const { return k_limit_; }
    bool empty() const { return intents_.empty(); }
    size_t size() const { return intents_.size(); }
    const Feature* feature() const {
        return intents_.empty() ? nullptr : intents_.front().label().feature;
    }

private:
    std::vector<Intent> intents_;
    size_t k_limit_;
};

// True iff some intent's sigma-set contains the path.
bool represents(const IntentSet& intents, const Path& p);

}  // namespace anime
