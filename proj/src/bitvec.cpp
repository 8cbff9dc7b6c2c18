#include "ordept/bitvec.hpp"

#include <stdexcept>

namespace ordept {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

int BitVec::popcount() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVec::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s = "0x";
    int nibbles = (n_ + 3) / 4;
    for (int v = nibbles - 1; v >= 0; --v) {
        int nib = int((words_[size_t(v) / 16] >> ((v % 16) * 4)) & 0xf);
        s += digits[nib];
    }
    return s;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(int(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(int(i), true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec: character outside {0,1}");
    }
    return v;
}

}  // namespace ordept
