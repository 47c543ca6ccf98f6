// Generator vectors of circulant adjacency matrices and their graph-side
// constructors (connection sets, quadratic residues).
//
// A length-n binary vector alpha = (b_1,...,b_n) with b_1 = 0 generates the
// n x n circulant matrix A whose row i is alpha rotated right by i-1; the
// code of interest is the [2n, n] binary code with generator matrix (I | A).
// Positions are 1-based in printed output to match the usual tables, 0-based
// in code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cgc/bitvec.hpp"

namespace cgc {

class GeneratorVector {
public:
    explicit GeneratorVector(BitVec bits) : bits_(std::move(bits)) {
        if (bits_.size() == 0) throw std::invalid_argument("generator vector must have positive length");
        if (bits_.get(0)) throw std::invalid_argument("generator vector must have b_1 = 0 (zero diagonal)");
    }

    static GeneratorVector zeros(std::size_t n) { return GeneratorVector(BitVec(n)); }

    // Parses the comma-separated-bits text form, e.g. "0,1,1,0,1".
    static GeneratorVector parse(std::string_view text) {
        std::vector<bool> bits;
        std::string token;
        std::istringstream in{std::string(text)};
        while (std::getline(in, token, ',')) {
            token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                        token.end());
            if (token == "0")
                bits.push_back(false);
            else if (token == "1")
                bits.push_back(true);
            else
                throw std::invalid_argument("bad bit '" + token + "' in vector text");
        }
        if (bits.empty()) throw std::invalid_argument("empty vector text");
        return GeneratorVector(BitVec::from_bools(bits));
    }

    std::size_t order() const { return bits_.size(); }  // n

    bool bit(std::size_t index0) const { return bits_.get(index0); }

    std::size_t weight() const { return bits_.popcount(); }

    const BitVec& bits() const { return bits_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (i) out += ',';
            out += bits_.get(i) ? '1' : '0';
        }
        return out;
    }

    bool operator==(const GeneratorVector& other) const { return bits_ == other.bits_; }

private:
    BitVec bits_;
};

// Offsets S = {a_1 < ... < a_k} with 0 < a_i < (n+1)/2 describing the circulant
// graph C(n, S): vertex i is adjacent to i +- a (mod n) for each offset a.
struct ConnectionSet {
    std::size_t order = 0;
    std::vector<std::size_t> offsets;

    ConnectionSet(std::size_t n, std::vector<std::size_t> offs) : order(n), offsets(std::move(offs)) {
        if (order == 0) throw std::invalid_argument("connection set needs positive order");
        std::sort(offsets.begin(), offsets.end());
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            // canonical range 0 < a < (n+1)/2, checked as 2a < n+1
            if (offsets[i] == 0 || 2 * offsets[i] >= order + 1)
                throw std::invalid_argument("connection-set offset " + std::to_string(offsets[i]) +
                                            " outside (0,(n+1)/2)");
            if (i && offsets[i] == offsets[i - 1])
                throw std::invalid_argument("duplicate connection-set offset " + std::to_string(offsets[i]));
        }
    }

    // Text form "n:a1,a2,...", e.g. "17:1,2,4,8". "17:" is the empty set.
    static ConnectionSet parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("connection set must look like n:a1,a2,...");
        const std::size_t n = parse_number(text.substr(0, colon));
        std::vector<std::size_t> offs;
        std::string token;
        std::istringstream in{std::string(text.substr(colon + 1))};
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            offs.push_back(parse_number(token));
        }
        return ConnectionSet(n, std::move(offs));
    }

private:
    static std::size_t parse_number(std::string_view s) {
        std::size_t value = 0;
        if (s.empty()) throw std::invalid_argument("empty number in connection set");
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad number '" + std::string(s) + "'");
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        return value;
    }
};

// alpha with b_{1+a} = b_{1+(n-a)} = 1 for each offset a; always symmetric.
inline GeneratorVector vector_from_connection_set(const ConnectionSet& s) {
    BitVec bits(s.order);
    for (std::size_t a : s.offsets) {
        bits.set(a, true);
        bits.set((s.order - a) % s.order, true);
    }
    return GeneratorVector(std::move(bits));
}

// Quadratic-residue (Paley) vector: b_{1+k} = 1 iff k is a nonzero square
// mod p. Requires p prime with p = 1 (mod 4) so that the residue set is
// symmetric and the graph undirected; p = 17 gives the 17-vertex graph with
// no 4-clique and no 4-independent-set.
inline GeneratorVector paley_vector(std::uint64_t p) {
    if (p < 5) throw std::invalid_argument("paley_vector needs a prime p >= 5 with p = 1 (mod 4)");
    for (std::uint64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p % 4 != 1)
        throw std::invalid_argument(std::to_string(p) + " = 3 (mod 4): residue set would not be symmetric");
    BitVec bits(static_cast<std::size_t>(p));
    for (std::uint64_t x = 1; x < p; ++x) bits.set(static_cast<std::size_t>((x * x) % p), true);
    return GeneratorVector(std::move(bits));
}

// Row `row` (1-based) of the circulant matrix A(alpha): position j holds
// b_{((j - row) mod n) + 1}; row 1 is alpha itself.
inline BitVec circulant_row(const GeneratorVector& alpha, std::size_t row) {
    if (row < 1 || row > alpha.order())
        throw std::out_of_range("circulant row index " + std::to_string(row) + " out of 1.." +
                                std::to_string(alpha.order()));
    return alpha.bits().rotated_right(row - 1);
}

// True iff A(alpha) is symmetric, i.e. alpha is the neighbour indicator of an
// undirected graph: b_{1+k} = b_{1+(n-k) mod n} for all k.
inline bool is_graph_vector(const GeneratorVector& alpha) {
    const std::size_t n = alpha.order();
    for (std::size_t k = 1; k < n; ++k)
        if (alpha.bit(k) != alpha.bit(n - k)) return false;
    return true;
}

// wt(alpha) + 1: with row 1 of (I | A) having weight wt(alpha) + 1, this is an
// upper bound on the minimum distance of the code.
inline std::size_t min_degree_bound(const GeneratorVector& alpha) { return alpha.weight() + 1; }

}  // namespace cgc
