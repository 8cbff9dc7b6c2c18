#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordept {

/// Packed bit vector over GF(2). Bit i lives in word i/64 at bit i%64.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec&) const = default;

    int popcount() const;
    bool any() const { return popcount() > 0; }

    /// Calls fn(i) for every set bit, ascending.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                fn(int(w * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    uint64_t word(int w) const { return words_[w]; }
    int word_count() const { return int(words_.size()); }

    std::string to_string() const;
    std::string to_hex() const;
    static BitVec from_string(std::string_view bits);

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace ordept
