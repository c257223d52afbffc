#include "anime/hre_feature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace anime {

namespace {

constexpr uint32_t kMaxBound = 63;          // NFA states must fit one word
constexpr uint64_t kAlphabetCap = 65536;    // base alphabets larger than this degrade counting
constexpr uint64_t kLeqMemoCap = 1u << 20;  // product-walk memo for expression containment

uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? std::numeric_limits<uint64_t>::max() : s;
}

// NFA over token strings for one expression. State bit i = "first i elements
// fully matched"; bit n is accepting. Transitions are mask arithmetic:
// advancing starts element i, a plus element may also re-consume in place.
struct ExprNfa {
    uint64_t plus_mask = 0;  // bit i: element i carries plus
    size_t n = 0;

    explicit ExprNfa(const std::vector<HreElement>& elems) : n(elems.size()) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i].plus) plus_mask |= uint64_t{1} << i;
    }

    static uint64_t initial() { return 1; }
    uint64_t accept_bit() const { return uint64_t{1} << n; }

    // match_mask bit i: the token matches element i's label.
    uint64_t step(uint64_t states, uint64_t match_mask) const {
        return ((states & match_mask) << 1) | (states & ((match_mask & plus_mask) << 1));
    }
};

uint64_t match_mask_for(const Feature& base, const std::vector<HreElement>& elems,
                        const Label& token) {
    uint64_t m = 0;
    for (size_t i = 0; i < elems.size(); ++i)
        if (base.leq(token, elems[i].label)) m |= uint64_t{1} << i;
    return m;
}

struct VectorHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = v.size();
        for (uint64_t w : v) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

HreFeature::HreFeature(std::string name, std::shared_ptr<const Feature> base, uint32_t d)
    : Feature(std::move(name), FeatureKind::Hre), base_(std::move(base)), d_(d) {
    if (base_ == nullptr) throw UsageError("hre feature needs a base feature");
    if (d_ == 0 || d_ > kMaxBound)
        throw UsageError("hre length bound must be in [1, " + std::to_string(kMaxBound) + "]");
    if (auto a = base_->sigma(base_->top(), kAlphabetCap)) {
        alphabet_ = std::move(*a);
        std::sort(alphabet_.begin(), alphabet_.end());
        alphabet_ok_ = true;
    }
}

const std::vector<Label>& HreFeature::alphabet() const {
    if (!alphabet_ok_)
        throw UsageError("base alphabet of '" + name() + "' is too large to enumerate");
    return alphabet_;
}

Label HreFeature::expression(std::vector<HreElement> elements) const {
    if (elements.empty()) throw UsageError("hre expression needs at least one element");
    if (elements.size() > d_)
        throw UsageError("hre expression longer than its bound d=" + std::to_string(d_));
    for (const HreElement& e : elements)
        if (!base_->contains(e.label))
            throw UsageError("hre element label is not a member of the base feature");
    return Label{this, HreValue{std::move(elements)}};
}

Label HreFeature::string_label(std::span<const Label> tokens) const {
    std::vector<HreElement> elems;
    elems.reserve(tokens.size());
    for (const Label& t : tokens) {
        if (!base_->contains(t) || !base_->is_concrete(t))
            throw UsageError("hre string tokens must be concrete base labels");
        elems.push_back(HreElement{t, false});
    }
    return expression(std::move(elems));
}

const std::vector<HreElement>& HreFeature::elements_of(const Label& l) const {
    require_mine(l);
    const HreValue* v = std::get_if<HreValue>(&l.value);
    if (v == nullptr || v->elements.empty() || v->elements.size() > d_)
        throw UsageError("malformed hre label");
    return v->elements;
}

bool HreFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const HreValue* v = std::get_if<HreValue>(&l.value);
    if (v == nullptr || v->elements.empty() || v->elements.size() > d_) return false;
    for (const HreElement& e : v->elements)
        if (!base_->contains(e.label)) return false;
    return true;
}

bool HreFeature::is_concrete(const Label& l) const {
    for (const HreElement& e : elements_of(l))
        if (e.plus || !base_->is_concrete(e.label)) return false;
    return true;
}

bool HreFeature::accepts(const Label& h, std::span<const Label> tokens) const {
    const std::vector<HreElement>& elems = elements_of(h);
    if (tokens.empty() || tokens.size() > d_) return false;
    for (const Label& t : tokens)
        if (!base_->contains(t) || !base_->is_concrete(t))
            throw UsageError("hre acceptance queries take concrete base tokens");
    ExprNfa nfa(elems);
    uint64_t states = ExprNfa::initial();
    for (const Label& t : tokens) {
        states = nfa.step(states, match_mask_for(*base_, elems, t));
        if (states == 0) return false;
    }
    return (states & nfa.accept_bit()) != 0;
}

HreCost HreFeature::expression_cost(const Label& h) const {
    const std::vector<HreElement>& elems = elements_of(h);
    double sum_log = 0.0;
    for (const HreElement& e : elems) sum_log += std::log(base_->cost(e.label));
    HreCost c;
    c.geo_mean = std::exp(sum_log / static_cast<double>(elems.size()));
    c.exponent = d_;
    c.value = std::pow(c.geo_mean, static_cast<double>(d_));
    return c;
}

double HreFeature::cost(const Label& l) const { return expression_cost(l).value; }

bool HreFeature::leq(const Label& a, const Label& b) const {
    const std::vector<HreElement>& ea = elements_of(a);
    const std::vector<HreElement>& eb = elements_of(b);
    if (a == b) return true;
    if (is_concrete(a)) {
        std::vector<Label> tokens;
        tokens.reserve(ea.size());
        for (const HreElement& e : ea) tokens.push_back(e.label);
        return accepts(b, tokens);
    }
    // General containment: walk the determinized product of both NFAs over the
    // base alphabet and look for a string accepted by `a` but not by `b`.
    const std::vector<Label>& sigma_f = alphabet();
    ExprNfa na(ea), nb(eb);
    std::vector<std::pair<uint64_t, uint64_t>> ma_mb(sigma_f.size());
    for (size_t t = 0; t < sigma_f.size(); ++t)
        ma_mb[t] = {match_mask_for(*base_, ea, sigma_f[t]),
                    match_mask_for(*base_, eb, sigma_f[t])};

    struct PairHash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            return std::hash<uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL) ^
                   std::hash<uint64_t>{}(p.second);
        }
    };
    std::unordered_map<std::pair<uint64_t, uint64_t>, uint32_t, PairHash> explored;
    explored.reserve(1024);
    struct Item {
        uint64_t sa, sb;
        uint32_t remaining;
    };
    std::vector<Item> stack{{ExprNfa::initial(), ExprNfa::initial(), d_}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.remaining == 0) continue;
        for (size_t t = 0; t < sigma_f.size(); ++t) {
            uint64_t sa = na.step(it.sa, ma_mb[t].first);
            if (sa == 0) continue;  // no extension is represented by `a`
            uint64_t sb = nb.step(it.sb, ma_mb[t].second);
            if ((sa & na.accept_bit()) && !(sb & nb.accept_bit())) return false;
            auto [pos, fresh] = explored.emplace(std::pair{sa, sb}, it.remaining - 1);
            if (!fresh) {
                if (pos->second >= it.remaining - 1) continue;
                pos->second = it.remaining - 1;
            }
            if (explored.size() > kLeqMemoCap)
                throw UsageError("hre containment walk exceeded its memo budget");
            stack.push_back({sa, sb, it.remaining - 1});
        }
    }
    return true;
}

Label HreFeature::top() const {
    return Label{this, HreValue{{HreElement{base_->top(), true}}}};
}

// ---- join ---------------------------------------------------------------------
//
// Monotone alignment DP. A state is (i, j, open, L): i and j input elements
// consumed, `open` the still-growing output element, L the output length so far
// (closed elements + the open one). For a fixed state only the smallest sum of
// log-costs of closed elements can win, so that is all we keep, plus parents for
// reconstruction. Transitions either close the open element and start a fresh one
// from the next element of each side (NEW), or fold the next element of one side
// into the open one, which then must carry plus (ABSORB).

namespace {

struct DpKey {
    uint16_t i, j, last_id, L;
    bool plus;
    bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
    size_t operator()(const DpKey& k) const {
        uint64_t v = (uint64_t(k.i) << 48) | (uint64_t(k.j) << 32) | (uint64_t(k.last_id) << 16) |
                     (uint64_t(k.L) << 1) | (k.plus ? 1 : 0);
        return std::hash<uint64_t>{}(v);
    }
};

struct DpVal {
    double slog = 0.0;
    DpKey parent{};
    bool has_parent = false;
    bool via_new = false;
};

}  // namespace

Label HreFeature::join(const Label& a, const Label& b) const {
    const std::vector<HreElement>& ea = elements_of(a);
    const std::vector<HreElement>& eb = elements_of(b);
    const size_t n1 = ea.size(), n2 = eb.size();

    // Local interning of open-element labels plus a join/cost cache.
    std::vector<Label> labels;
    std::unordered_map<Label, uint16_t> label_ids;
    auto intern = [&](const Label& l) {
        auto [it, fresh] = label_ids.emplace(l, static_cast<uint16_t>(labels.size()));
        if (fresh) labels.push_back(l);
        return it->second;
    };
    std::vector<double> label_log;
    auto log_cost = [&](uint16_t id) {
        if (label_log.size() < labels.size()) label_log.resize(labels.size(), -1.0);
        if (label_log[id] < 0.0) label_log[id] = std::log(base_->cost(labels[id]));
        return label_log[id];
    };

    std::unordered_map<DpKey, DpVal, DpKeyHash> dp;
    std::vector<std::vector<DpKey>> buckets(n1 + n2 + 1);
    auto relax = [&](const DpKey& key, double slog, const DpKey& parent, bool has_parent,
                     bool via_new) {
        auto [it, fresh] = dp.emplace(key, DpVal{slog, parent, has_parent, via_new});
        if (fresh) {
            buckets[size_t(key.i) + key.j].push_back(key);
        } else if (slog < it->second.slog) {
            it->second = DpVal{slog, parent, has_parent, via_new};
        }
    };

    DpKey init{1, 1, intern(base_->join(ea[0].label, eb[0].label)), 1,
               ea[0].plus || eb[0].plus};
    relax(init, 0.0, DpKey{}, false, false);

    for (size_t s = 2; s <= n1 + n2; ++s) {
        for (size_t idx = 0; idx < buckets[s].size(); ++idx) {
            DpKey key = buckets[s][idx];
            DpVal val = dp[key];
            if (key.i < n1 && key.j < n2) {
                DpKey next{static_cast<uint16_t>(key.i + 1), static_cast<uint16_t>(key.j + 1),
                           intern(base_->join(ea[key.i].label, eb[key.j].label)),
                           static_cast<uint16_t>(key.L + 1),
                           ea[key.i].plus || eb[key.j].plus};
                relax(next, val.slog + log_cost(key.last_id), key, true, true);
            }
            if (key.i < n1) {
                DpKey next{static_cast<uint16_t>(key.i + 1), key.j,
                           intern(base_->join(labels[key.last_id], ea[key.i].label)), key.L,
                           true};
                relax(next, val.slog, key, true, false);
            }
            if (key.j < n2) {
                DpKey next{key.i, static_cast<uint16_t>(key.j + 1),
                           intern(base_->join(labels[key.last_id], eb[key.j].label)), key.L,
                           true};
                relax(next, val.slog, key, true, false);
            }
        }
    }

    // Finalize: close the open element of every (n1, n2) state, then pick the
    // least geometric mean; ties prefer fewer elements, then lexicographic order.
    auto reconstruct = [&](const DpKey& final_key) {
        std::vector<HreElement> out{HreElement{labels[final_key.last_id], final_key.plus}};
        DpKey cur = final_key;
        while (true) {
            const DpVal& v = dp[cur];
            if (!v.has_parent) break;
            if (v.via_new)
                out.push_back(HreElement{labels[v.parent.last_id], v.parent.plus});
            cur = v.parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
    };

    bool have_best = false;
    double best_slog = 0.0;
    uint16_t best_len = 0;
    std::vector<HreElement> best_elems;
    for (const DpKey& key : buckets[n1 + n2]) {
        if (key.i != n1 || key.j != n2) continue;
        double total = dp[key].slog + log_cost(key.last_id);
        // geo mean order: total1/L1 vs total2/L2 without division
        bool better = false;
        if (!have_best) {
            better = true;
        } else {
            double lhs = total * best_len, rhs = best_slog * key.L;
            if (lhs != rhs) {
                better = lhs < rhs;
            } else if (key.L != best_len) {
                better = key.L < best_len;
            } else {
                std::vector<HreElement> cand = reconstruct(key);
                better = HreValue{cand} < HreValue{best_elems};
            }
        }
        if (better) {
            have_best = true;
            best_slog = total;
            best_len = key.L;
            best_elems = reconstruct(key);
        }
    }
    if (!have_best) throw InternalError("hre join produced no candidate");

    // Canonicalize: adjacent plus elements with the same label collapse.
    std::vector<HreElement> merged;
    for (HreElement& e : best_elems) {
        if (!merged.empty() && merged.back().plus && e.plus && merged.back().label == e.label)
            continue;
        merged.push_back(std::move(e));
    }
    return Label{this, HreValue{std::move(merged)}};
}

// ---- counting -------------------------------------------------------------------

SigmaCount HreFeature::count_union(std::span<const Label> hs, uint64_t cap) const {
    if (hs.empty()) return {0.0, true};
    std::vector<const std::vector<HreElement>*> all;
    all.reserve(hs.size());
    for (const Label& h : hs) all.push_back(&elements_of(h));
    if (!alphabet_ok_) {
        // No enumerable alphabet: all we can certify is a crude upper bound.
        double per_len = base_->sigma_count(base_->top(), cap).value;
        double total = 0.0, pw = 1.0;
        for (uint32_t len = 1; len <= d_; ++len) {
            pw *= per_len;
            total += pw;
        }
        return {total, false};
    }
    const std::vector<Label>& sigma_f = alphabet();

    std::vector<ExprNfa> nfas;
    nfas.reserve(all.size());
    for (const auto* e : all) nfas.emplace_back(*e);
    // match masks per token per expression
    std::vector<std::vector<uint64_t>> match(sigma_f.size(), std::vector<uint64_t>(all.size()));
    for (size_t t = 0; t < sigma_f.size(); ++t)
        for (size_t e = 0; e < all.size(); ++e)
            match[t][e] = match_mask_for(*base_, *all[e], sigma_f[t]);

    // f(S, r): distinct strings of length <= r accepted from joint state S.
    // The joint state advances deterministically per token, so every counted
    // string is counted exactly once.
    std::unordered_map<std::vector<uint64_t>, std::vector<int64_t>, VectorHash> memo;
    bool overflow = false;

    auto rec = [&](auto&& self, const std::vector<uint64_t>& state, uint32_t r) -> uint64_t {
        if (r == 0) return 0;
        auto [it, fresh] = memo.try_emplace(state);
        if (fresh) it->second.assign(d_ + 1, -1);
        else if (it->second[r] >= 0) return static_cast<uint64_t>(it->second[r]);
        if (memo.size() > cap) {
            overflow = true;
            return 0;
        }
        uint64_t total = 0;
        std::vector<uint64_t> next(state.size());
        for (size_t t = 0; t < sigma_f.size() && !overflow; ++t) {
            bool alive = false, accepted = false;
            for (size_t e = 0; e < state.size(); ++e) {
                next[e] = nfas[e].step(state[e], match[t][e]);
                alive = alive || next[e] != 0;
                accepted = accepted || (next[e] & nfas[e].accept_bit());
            }
            if (!alive) continue;
            total = sat_add(total, accepted ? 1 : 0);
            total = sat_add(total, self(self, next, r - 1));
        }
        // memo entries may be invalidated mid-overflow; only cache clean results
        if (!overflow) memo[state][r] = static_cast<int64_t>(total);
        return total;
    };

    std::vector<uint64_t> init(all.size(), ExprNfa::initial());
    uint64_t exact = rec(rec, init, d_);
    if (!overflow) return {static_cast<double>(exact), true};

    if (hs.size() == 1) {
        // A single expression outgrew the memo; fall back to the crude bound.
        double per_len = base_->sigma_count(base_->top(), cap).value;
        double total = 0.0, pw = 1.0;
        for (uint32_t len = 1; len <= d_; ++len) {
            pw *= per_len;
            total += pw;
        }
        return {total, false};
    }

    // Union memo outgrew the cap: sum per-expression counts (over-counts overlap).
    double sum = 0.0;
    for (const Label& h : hs)
        sum += count_union(std::span<const Label>(&h, 1), cap).value;
    return {sum, false};
}

SigmaCount HreFeature::sigma_count(const Label& l, uint64_t cap) const {
    return count_union(std::span<const Label>(&l, 1), cap);
}

std::optional<std::vector<Label>> HreFeature::sigma(const Label& l, uint64_t cap) const {
    if (!alphabet_ok_) return std::nullopt;
    const std::vector<Label>& sigma_f = alphabet();
    const std::vector<HreElement>& elems = elements_of(l);
    ExprNfa nfa(elems);
    std::vector<uint64_t> match(sigma_f.size());
    for (size_t t = 0; t < sigma_f.size(); ++t)
        match[t] = match_mask_for(*base_, elems, sigma_f[t]);

    std::vector<Label> out;
    std::vector<Label> prefix;
    bool overflow = false;
    auto rec = [&](auto&& self, uint64_t state, uint32_t r) -> void {
        if (overflow || r == 0) return;
        for (size_t t = 0; t < sigma_f.size(); ++t) {
            uint64_t next = nfa.step(state, match[t]);
            if (next == 0) continue;
            prefix.push_back(sigma_f[t]);
            if (next & nfa.accept_bit()) {
                if (out.size() >= cap) {
                    overflow = true;
                } else {
                    out.push_back(string_label(prefix));
                }
            }
            if (!overflow) self(self, next, r - 1);
            prefix.pop_back();
            if (overflow) return;
        }
    };
    rec(rec, ExprNfa::initial(), d_);
    if (overflow) return std::nullopt;
    return out;
}

std::string HreFeature::print_text(const Label& l) const {
    const std::vector<HreElement>& elems = elements_of(l);
    std::string s;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) s += '.';
        std::string part = base_->print_text(elems[i].label);
        if (part.find('.') != std::string::npos || part.find('+') != std::string::npos)
            throw UsageError("base label '" + part + "' cannot appear in an hre text form");
        s += part;
        if (elems[i].plus) s += '+';
    }
    return s;
}

Label HreFeature::parse_text(const std::string& text) const {
    if (text.empty()) throw UsageError("empty hre literal");
    std::vector<HreElement> elems;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t dot = text.find('.', pos);
        std::string part = dot == std::string::npos ? text.substr(pos)
                                                    : text.substr(pos, dot - pos);
        bool plus = false;
        if (!part.empty() && part.back() == '+') {
            plus = true;
            part.pop_back();
        }
        if (part.empty()) throw UsageError("bad hre literal '" + text + "'");
        elems.push_back(HreElement{base_->parse_text(part), plus});
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return expression(std::move(elems));
}

// ---- free functions --------------------------------------------------------------

namespace {
const HreFeature& hre_feature_of(const Label& l) {
    const auto* f = dynamic_cast<const HreFeature*>(l.feature);
    if (f == nullptr) throw UsageError("label is not an hre label");
    return *f;
}
}  // namespace

bool hre_accepts(const Label& h, std::span<const Label> tokens) {
    return hre_feature_of(h).accepts(h, tokens);
}

bool hre_accepts(const Label& h, const Label& concrete_string) {
    const HreFeature& f = hre_feature_of(h);
    if (!f.is_concrete(concrete_string))
        throw UsageError("acceptance query needs a concrete string label");
    std::vector<Label> tokens;
    for (const HreElement& e : f.elements_of(concrete_string)) tokens.push_back(e.label);
    return f.accepts(h, tokens);
}

HreCost hre_cost(const Label& h) { return hre_feature_of(h).expression_cost(h); }

Label hre_join(const Label& h1, const Label& h2) { return join(h1, h2); }

SigmaCount hre_count(std::span<const Label> hs, uint64_t cap) {
    if (hs.empty()) throw UsageError("hre_count needs at least one expression");
    const HreFeature& f = hre_feature_of(hs.front());
    for (const Label& h : hs)
        if (h.feature != hs.front().feature)
            throw UsageError("hre_count inputs mix feature types");
    return f.count_union(hs, cap);
}

}  // namespace anime
