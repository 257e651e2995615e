#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace valgebra {

/// Fixed-size bit vector used for support sets of group tags.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool subset_of(const BitVec& other) const {
        if (size_ != other.size_) return false;
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace valgebra
