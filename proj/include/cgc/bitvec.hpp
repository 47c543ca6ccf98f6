// Bit-packed GF(2) vectors. One cache-friendly word array per vector; all
// arithmetic is XOR / popcount on 64-bit words.
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgc {

class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec from_bools(const std::vector<bool>& bits) {
        BitVec v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) v.set(i, true);
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    void xor_with(const BitVec& other) {
        if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec: size mismatch in xor");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    // Cyclic right rotation within the n-bit window: out[j] = in[(j - k) mod n].
    BitVec rotated_right(std::size_t k) const {
        BitVec out(nbits_);
        if (nbits_ == 0) return out;
        k %= nbits_;
        for (std::size_t j = 0; j < nbits_; ++j)
            if (get((j + nbits_ - k) % nbits_)) out.set(j, true);
        return out;
    }

    // Concatenation (left | right), used to assemble two-sided codewords.
    static BitVec concat(const BitVec& left, const BitVec& right) {
        BitVec out(left.size() + right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
            if (left.get(i)) out.set(i, true);
        for (std::size_t i = 0; i < right.size(); ++i)
            if (right.get(i)) out.set(left.size() + i, true);
        return out;
    }

    // 0-based indices of set bits, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    // Support-lexicographic order on equal-length vectors: compares the sorted
    // index sequences of set bits element by element. For equal popcounts this
    // reduces to: whichever vector owns the lowest differing set bit is smaller.
    static bool support_less(const BitVec& a, const BitVec& b) {
        if (a.nbits_ != b.nbits_) throw std::invalid_argument("BitVec: size mismatch in support_less");
        const auto sa = a.support();
        const auto sb = b.support();
        return sa < sb;
    }

    bool operator==(const BitVec& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(std::size_t i) const {
        if (i >= nbits_) throw std::out_of_range("BitVec: index " + std::to_string(i) + " out of range");
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cgc
