#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace anime::detail {

// Fixed-capacity dynamic bitset, just enough for sigma-set bookkeeping.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    void set(size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void or_with(const Bitset& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    size_t count() const {
        size_t n = 0;
        for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
        return n;
    }

    size_t size() const { return nbits_; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

private:
    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace anime::detail
