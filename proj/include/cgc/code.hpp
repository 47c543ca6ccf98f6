// The [2n, n] code with generator matrix (I | A(alpha)). The identity block
// forces rank n, so length and dimension are fixed by alpha alone. Rows of A
// are produced on demand by rotation; the matrix is never materialized.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cgc/bitvec.hpp"
#include "cgc/generator.hpp"

namespace cgc {

class Codeword {
public:
    Codeword() = default;  // empty placeholder; real codewords come from encode()

    explicit Codeword(BitVec bits) : bits_(std::move(bits)), weight_(bits_.popcount()) {}

    std::size_t length() const { return bits_.size(); }
    std::size_t weight() const { return weight_; }
    bool bit(std::size_t index0) const { return bits_.get(index0); }
    const BitVec& bits() const { return bits_; }

    // 1-based positions of nonzero coordinates, for printed output.
    std::vector<std::size_t> support_1based() const {
        auto s = bits_.support();
        for (auto& i : s) ++i;
        return s;
    }

    bool operator==(const Codeword& other) const { return bits_ == other.bits_; }

private:
    BitVec bits_;
    std::size_t weight_ = 0;
};

// Packs the rows of A(alpha) as word arrays, one row per rotation of alpha.
// This is the working form used by every enumeration loop.
inline std::vector<std::uint64_t> packed_rows(const GeneratorVector& alpha, std::size_t& words_per_row) {
    const std::size_t n = alpha.order();
    words_per_row = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * words_per_row, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const BitVec row = alpha.bits().rotated_right(i);
        for (std::size_t w = 0; w < words_per_row; ++w) rows[i * words_per_row + w] = row.words()[w];
    }
    return rows;
}

class CirculantCode {
public:
    explicit CirculantCode(GeneratorVector alpha) : alpha_(std::move(alpha)) {}

    const GeneratorVector& alpha() const { return alpha_; }
    std::size_t length() const { return 2 * alpha_.order(); }
    std::size_t dimension() const { return alpha_.order(); }

    // (message | message * A) over GF(2).
    Codeword encode(const BitVec& message) const {
        const std::size_t n = alpha_.order();
        if (message.size() != n) throw std::invalid_argument("message length must equal the matrix order");
        BitVec a_half(n);
        for (std::size_t i = 0; i < n; ++i)
            if (message.get(i)) a_half.xor_with(alpha_.bits().rotated_right(i));
        return Codeword(BitVec::concat(message, a_half));
    }

    // XOR of the generator rows of (I | A) named by 1-based indices; this is
    // the codeword of the message whose support is exactly `rows`.
    Codeword combine_rows(std::span<const std::size_t> rows) const {
        BitVec message(alpha_.order());
        for (std::size_t r : rows) {
            if (r < 1 || r > alpha_.order()) throw std::out_of_range("row index out of 1..n");
            message.set(r - 1, true);
        }
        return encode(message);
    }

private:
    GeneratorVector alpha_;
};

}  // namespace cgc
