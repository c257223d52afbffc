#include "anime/oracle.hpp"

#include <algorithm>
#include <set>

#include "anime/hre_feature.hpp"

namespace anime::oracle {

namespace {

constexpr uint64_t kHreAlphabetBudget = 4;

bool set_represents(const std::vector<Label>& intents, const Label& path) {
    for (const Label& i : intents)
        if (leq(path, i)) return true;
    return false;
}

}  // namespace

IntentSet optimal_infer(std::span<const Path> paths, const Feature& feature, size_t k,
                        const OracleBudget& budget) {
    if (paths.empty()) throw UsageError("optimal_infer requires paths");
    if (k == 0) throw UsageError("optimal_infer requires k >= 1");
    if (paths.size() > budget.max_paths)
        throw UsageError("optimal_infer path budget exceeded");
    if (k > budget.max_k) throw UsageError("optimal_infer k budget exceeded");

    auto uni = feature.universe(budget.max_labels);
    if (!uni) throw UsageError("optimal_infer label budget exceeded");
    std::vector<Label> labels = std::move(*uni);
    std::sort(labels.begin(), labels.end());

    std::vector<Label> targets;
    targets.reserve(paths.size());
    for (const Path& p : paths) {
        if (p.label().feature != &feature)
            throw UsageError("optimal_infer path from a different feature");
        targets.push_back(p.label());
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    // Only labels covering at least one path can appear in a minimizer.
    std::vector<Label> useful;
    std::vector<std::vector<bool>> covers;  // per useful label, per target
    for (const Label& l : labels) {
        std::vector<bool> cov(targets.size(), false);
        bool any = false;
        for (size_t t = 0; t < targets.size(); ++t)
            if (feature.leq(targets[t], l)) {
                cov[t] = true;
                any = true;
            }
        if (any) {
            useful.push_back(l);
            covers.push_back(std::move(cov));
        }
    }

    std::vector<size_t> chosen, best_choice;
    double best_cost = 0.0;
    bool have_best = false;

    // Branch on the first uncovered target; exhaustive with cost pruning.
    auto rec = [&](auto&& self, std::vector<bool>& covered, double cost_so_far) -> void {
        if (have_best && cost_so_far >= best_cost) return;
        size_t t = 0;
        while (t < targets.size() && covered[t]) ++t;
        if (t == targets.size()) {
            best_cost = cost_so_far;
            best_choice = chosen;
            have_best = true;
            return;
        }
        if (chosen.size() == k) return;
        for (size_t li = 0; li < useful.size(); ++li) {
            if (!covers[li][t]) continue;
            if (!chosen.empty() && li <= chosen.back()) continue;  // canonical ascending
            std::vector<bool> covered2 = covered;
            for (size_t tt = 0; tt < targets.size(); ++tt)
                if (covers[li][tt]) covered2[tt] = true;
            chosen.push_back(li);
            self(self, covered2, cost_so_far + feature.cost(useful[li]));
            chosen.pop_back();
        }
    };
    std::vector<bool> covered(targets.size(), false);
    rec(rec, covered, 0.0);
    if (!have_best) throw InternalError("optimal_infer found no covering set");

    std::vector<Intent> out;
    out.reserve(best_choice.size());
    for (size_t li : best_choice) out.emplace_back(useful[li]);
    return IntentSet(std::move(out), k);
}

bool naive_hre_accepts(const Label& h, std::span<const Label> tokens) {
    const auto* f = dynamic_cast<const HreFeature*>(h.feature);
    if (f == nullptr) throw UsageError("naive_hre_accepts needs an hre label");
    const std::vector<HreElement>& elems = f->elements_of(h);
    if (tokens.empty() || tokens.size() > f->bound()) return false;

    const Feature& base = f->base();
    auto base_universe = base.universe(1024);
    if (!base_universe) throw UsageError("naive_hre_accepts base universe budget exceeded");

    // Ancestor sets per token.
    std::vector<std::vector<Label>> ancestors(tokens.size());
    for (size_t t = 0; t < tokens.size(); ++t)
        for (const Label& l : *base_universe)
            if (base.leq(tokens[t], l)) ancestors[t].push_back(l);

    // Plain-regex match with exact symbol equality: element e consumes one token,
    // or >= 1 when marked plus.
    auto regex_match = [&](auto&& self, const std::vector<Label>& s, size_t si,
                           size_t ei) -> bool {
        if (ei == elems.size()) return si == s.size();
        if (si == s.size()) return false;
        if (s[si] != elems[ei].label) return false;
        if (self(self, s, si + 1, ei + 1)) return true;
        if (elems[ei].plus) {
            size_t j = si + 1;
            while (j < s.size() && s[j] == elems[ei].label) {
                if (self(self, s, j + 1, ei + 1)) return true;
                ++j;
            }
        }
        return false;
    };

    // Every substitution of tokens by their ancestors.
    std::vector<Label> substituted(tokens.begin(), tokens.end());
    auto enumerate = [&](auto&& self, size_t t) -> bool {
        if (t == tokens.size())
            return regex_match(regex_match, substituted, 0, 0);
        for (const Label& a : ancestors[t]) {
            substituted[t] = a;
            if (self(self, t + 1)) return true;
        }
        return false;
    };
    return enumerate(enumerate, 0);
}

std::vector<Label> enumerate_represented(const IntentSet& intents, const OracleBudget& budget) {
    if (intents.empty()) return {};
    const Feature& f = *intents.feature();
    std::vector<Label> labels;
    for (const Intent& i : intents.intents()) labels.push_back(i.label());

    if (f.kind() == FeatureKind::Hre) {
        const auto& hf = dynamic_cast<const HreFeature&>(f);
        auto base_concrete = hf.base().sigma(hf.base().top(), kHreAlphabetBudget);
        if (!base_concrete || hf.bound() > 4)
            throw UsageError("enumerate_represented hre budget exceeded");
        std::vector<Label> alphabet = std::move(*base_concrete);
        std::sort(alphabet.begin(), alphabet.end());

        std::vector<Label> out;
        std::vector<Label> tokens;
        auto rec = [&](auto&& self) -> void {
            if (!tokens.empty()) {
                for (const Label& h : labels)
                    if (naive_hre_accepts(h, tokens)) {
                        out.push_back(hf.string_label(tokens));
                        break;
                    }
            }
            if (tokens.size() == hf.bound()) return;
            for (const Label& a : alphabet) {
                tokens.push_back(a);
                self(self);
                tokens.pop_back();
            }
        };
        rec(rec);
        return out;
    }

    auto uni = f.universe(budget.max_labels * budget.max_labels * 64);
    if (!uni) throw UsageError("enumerate_represented universe budget exceeded");
    std::vector<Label> out;
    for (const Label& cand : *uni) {
        if (!f.is_concrete(cand)) continue;
        if (set_represents(labels, cand)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace anime::oracle
