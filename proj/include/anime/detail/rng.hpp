#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace anime::detail {

// mt19937_64 with hand-rolled draws. The standard distributions are
// implementation-defined, which would make seeded runs differ across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    int64_t between(int64_t lo, int64_t hi) {  // inclusive bounds
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    // m distinct indices out of [0, n), ascending.
    std::vector<size_t> sample_indices(size_t n, size_t m) {
        if (m >= n) {
            std::vector<size_t> all(n);
            for (size_t i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        // Floyd's algorithm keeps the draw count at m.
        std::vector<size_t> out;
        out.reserve(m);
        for (size_t j = n - m; j < n; ++j) {
            size_t t = static_cast<size_t>(below(j + 1));
            bool seen = false;
            for (size_t v : out)
                if (v == t) {
                    seen = true;
                    break;
                }
            out.push_back(seen ? j : t);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace anime::detail
