// Exact minimum distance and full weight distribution of (I | A(alpha)).
//
// Distance: every codeword is (m | mA) with weight wt(m) + wt(mA), so
// enumerating messages by ascending weight k and keeping an upper bound U on
// the best codeword weight terminates once k > U. Cyclic shifts of a message
// rotate both halves of its codeword, so only supports containing index 1
// need to be enumerated. Starting point: row 1 itself gives U = wt(alpha)+1.
//
// Distribution: a Gray-code sweep over all 2^n messages XORs exactly one row
// of A per step and popcounts, giving exact counts A_0..A_2n.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgc/bitvec.hpp"
#include "cgc/code.hpp"
#include "cgc/generator.hpp"

namespace cgc {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

template <class Visitor>
bool anchored_rec(std::size_t n, std::size_t nw, const std::uint64_t* rows, std::size_t k, std::size_t depth,
                  std::size_t start, std::uint64_t* acc, std::size_t* support, Visitor& visit) {
    if (depth == k)
        return visit(std::span<const std::uint64_t>(acc + k * nw, nw), std::span<const std::size_t>(support, k));
    const std::size_t remaining = k - depth;
    for (std::size_t pos = start; pos + remaining <= n; ++pos) {
        const std::uint64_t* row = rows + pos * nw;
        const std::uint64_t* in = acc + depth * nw;
        std::uint64_t* out = acc + (depth + 1) * nw;
        for (std::size_t w = 0; w < nw; ++w) out[w] = in[w] ^ row[w];
        support[depth] = pos;
        if (!anchored_rec(n, nw, rows, k, depth + 1, pos + 1, acc, support, visit)) return false;
    }
    return true;
}

// Enumerates all weight-k messages whose support contains index 0, in
// lexicographic order of the support, maintaining the XOR of the selected
// packed A-rows. Visitor gets (acc words, 0-based support) and returns false
// to abort the whole enumeration.
template <class Visitor>
bool enumerate_anchored_messages(std::size_t n, std::size_t nw, const std::uint64_t* rows, std::size_t k,
                                 Visitor&& visit) {
    if (k == 0 || k > n) return true;
    std::vector<std::uint64_t> acc((k + 1) * nw, 0);
    std::vector<std::size_t> support(k, 0);
    for (std::size_t w = 0; w < nw; ++w) acc[nw + w] = rows[w];  // row 0 always selected
    return anchored_rec(n, nw, rows, k, 1, 1, acc.data(), support.data(), visit);
}

inline std::size_t words_popcount(std::span<const std::uint64_t> words) {
    std::size_t total = 0;
    for (std::uint64_t w : words) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

}  // namespace detail

// (k, s'_k): the I-side contribution is k itself, s'_k is the least A-side
// weight over all weight-k messages.
struct PerWeightMinimum {
    std::size_t message_weight = 0;
    std::size_t a_side_minimum = 0;
};

struct DistanceResult {
    std::size_t d = 0;
    bool exact = true;  // false when an early stop_below abort fired
    Codeword witness;
    std::vector<PerWeightMinimum> per_weight_minima;
};

struct DistanceOptions {
    // Abort as soon as any codeword of weight < stop_below is seen; the
    // result's d is then only an upper bound (exact = false).
    std::optional<std::size_t> stop_below;
    // Keep enumerating (and recording s'_k) up to this message weight even
    // after the distance is settled, to reproduce full printed tables.
    std::optional<std::size_t> table_depth;
};

inline DistanceResult min_distance(const GeneratorVector& alpha, const DistanceOptions& opts = {}) {
    const std::size_t n = alpha.order();
    std::size_t nw = 0;
    const std::vector<std::uint64_t> rows = packed_rows(alpha, nw);
    const CirculantCode code(alpha);

    // Row 1 of (I | A) is an achieved upper bound.
    BitVec e1(n);
    e1.set(0, true);
    Codeword best = code.encode(e1);
    std::size_t bound = best.weight();

    DistanceResult result;

    auto codeword_of = [&](std::span<const std::size_t> support) {
        BitVec message(n);
        for (std::size_t i : support) message.set(i, true);
        return code.encode(message);
    };

    if (opts.stop_below && bound < *opts.stop_below) {
        // row 1 alone is already below the screening threshold
        result.d = bound;
        result.exact = false;
        result.witness = std::move(best);
        return result;
    }

    bool aborted = false;
    for (std::size_t k = 1; k <= n; ++k) {
        const bool within_bound = k <= bound;
        const bool within_table = opts.table_depth && k <= *opts.table_depth;
        if (!within_bound && !within_table) break;

        std::size_t level_min = std::size_t(-1);
        detail::enumerate_anchored_messages(
            n, nw, rows.data(), k,
            [&](std::span<const std::uint64_t> acc, std::span<const std::size_t> support) {
                const std::size_t aw = detail::words_popcount(acc);
                level_min = std::min(level_min, aw);
                const std::size_t w = k + aw;
                if (w < bound) {
                    bound = w;
                    best = codeword_of(support);
                    if (opts.stop_below && w < *opts.stop_below) {
                        aborted = true;
                        return false;
                    }
                } else if (w == bound) {
                    Codeword candidate = codeword_of(support);
                    if (BitVec::support_less(candidate.bits(), best.bits())) best = std::move(candidate);
                }
                return true;
            });
        if (aborted) break;
        result.per_weight_minima.push_back({k, level_min});
    }

    result.d = bound;
    result.exact = !aborted;
    result.witness = std::move(best);
    return result;
}

// Counts A_0..A_{2n} of codewords by weight, exact unbounded integers.
class WeightDistribution {
public:
    WeightDistribution(std::size_t code_length, std::vector<BigInt> counts)
        : length_(code_length), counts_(std::move(counts)) {
        if (counts_.size() != length_ + 1) throw std::invalid_argument("distribution needs length + 1 counts");
        if (counts_[0] != 1) throw std::invalid_argument("distribution must have A_0 = 1");
        for (const BigInt& c : counts_)
            if (c < 0) throw std::invalid_argument("distribution counts must be non-negative");
    }

    std::size_t code_length() const { return length_; }
    const BigInt& count(std::size_t weight) const { return counts_.at(weight); }
    const std::vector<BigInt>& counts() const { return counts_; }

    BigInt total() const {
        BigInt sum = 0;
        for (const BigInt& c : counts_) sum += c;
        return sum;
    }

    // Least i >= 1 with A_i > 0; equals the minimum distance for a code's own
    // distribution.
    std::optional<std::size_t> min_positive_weight() const {
        for (std::size_t i = 1; i <= length_; ++i)
            if (counts_[i] > 0) return i;
        return std::nullopt;
    }

    bool operator==(const WeightDistribution& other) const {
        return length_ == other.length_ && counts_ == other.counts_;
    }

private:
    std::size_t length_;
    std::vector<BigInt> counts_;
};

struct DistributionOptions {
    std::size_t max_order = 32;  // refuse 2^n sweeps beyond this n
    unsigned threads = 1;
};

namespace detail {

// Gray-code sweep of messages t in [t_begin, t_end) for n <= 63; one row XOR
// and two popcounts per step. Counts are indexed by codeword weight.
inline void distribution_sweep(std::size_t n, const std::uint64_t* rows, std::uint64_t t_begin, std::uint64_t t_end,
                               std::uint64_t* counts) {
    std::uint64_t gray = t_begin ^ (t_begin >> 1);
    std::uint64_t acc = 0;
    for (std::uint64_t bits = gray; bits;) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        acc ^= rows[b];
        bits &= bits - 1;
    }
    std::size_t message_weight = static_cast<std::size_t>(std::popcount(gray));
    ++counts[message_weight + static_cast<std::size_t>(std::popcount(acc))];
    for (std::uint64_t t = t_begin + 1; t != t_end; ++t) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(t));
        const std::uint64_t mask = std::uint64_t{1} << b;
        gray ^= mask;
        acc ^= rows[b];
        message_weight += (gray & mask) ? 1 : std::size_t(-1);
        ++counts[message_weight + static_cast<std::size_t>(std::popcount(acc))];
    }
}

}  // namespace detail

inline WeightDistribution weight_distribution(const GeneratorVector& alpha, const DistributionOptions& opts = {}) {
    const std::size_t n = alpha.order();
    if (n > opts.max_order)
        throw std::invalid_argument("weight_distribution: n = " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(opts.max_order) + " (2^n enumeration)");
    if (n > 63) throw std::invalid_argument("weight_distribution: full enumeration limited to n <= 63");

    std::size_t nw = 0;
    const std::vector<std::uint64_t> rows = packed_rows(alpha, nw);  // nw == 1 for n <= 63

    const std::uint64_t total = std::uint64_t{1} << n;
    unsigned threads = std::max(1u, opts.threads);
    if (threads > total) threads = static_cast<unsigned>(total);

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(2 * n + 1, 0));
    if (threads == 1) {
        detail::distribution_sweep(n, rows.data(), 0, total, partial[0].data());
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / threads;
        for (unsigned i = 0; i < threads; ++i) {
            const std::uint64_t begin = chunk * i;
            const std::uint64_t end = (i + 1 == threads) ? total : chunk * (i + 1);
            pool.emplace_back(detail::distribution_sweep, n, rows.data(), begin, end, partial[i].data());
        }
        for (auto& t : pool) t.join();
    }

    std::vector<BigInt> counts(2 * n + 1, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i <= 2 * n; ++i) counts[i] += p[i];
    return WeightDistribution(2 * n, std::move(counts));
}

// "1+133z^8+2052z^10+..." ascending in exponent, zero terms omitted,
// unit coefficients printed bare.
inline std::string enumerator_string(const WeightDistribution& w) {
    std::string out;
    for (std::size_t i = 0; i <= w.code_length(); ++i) {
        const BigInt& c = w.count(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += c.str();
        } else {
            if (c != 1) out += c.str();
            out += "z^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

// CSV export, one `weight,count` line per nonzero coefficient.
inline std::string distribution_csv(const WeightDistribution& w) {
    std::string out = "weight,count\n";
    for (std::size_t i = 0; i <= w.code_length(); ++i)
        if (w.count(i) != 0) out += std::to_string(i) + "," + w.count(i).str() + "\n";
    return out;
}

}  // namespace cgc
