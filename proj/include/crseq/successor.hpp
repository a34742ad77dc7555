#ifndef CRSEQ_SUCCESSOR_HPP
#define CRSEQ_SUCCESSOR_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"

namespace crseq {

/// rho0 / rho1 join the low / high weight PCR cycles; rho2 is the
/// unrestricted de Bruijn successor; theorem1 and pcr4 bridge the two
/// halves at the conjugate pair selected by a DVector.
enum class RuleKind { rho0, rho1, rho2, theorem1, pcr4 };

inline const char* to_string(RuleKind r) {
    switch (r) {
        case RuleKind::rho0: return "rho0";
        case RuleKind::rho1: return "rho1";
        case RuleKind::rho2: return "rho2";
        case RuleKind::theorem1: return "theorem1";
        case RuleKind::pcr4: return "pcr4";
    }
    return "?";
}

inline RuleKind parse_rule(std::string_view s) {
    if (s == "rho0") return RuleKind::rho0;
    if (s == "rho1") return RuleKind::rho1;
    if (s == "rho2") return RuleKind::rho2;
    if (s == "theorem1") return RuleKind::theorem1;
    if (s == "pcr4") return RuleKind::pcr4;
    throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

/// Tail vector d = d_1..d_{n-1} with d_i = complement(d_{n-i}).
class DVector {
public:
    explicit DVector(BitString bits) : bits_(std::move(bits)) {
        if (bits_.size() < 2 || bits_.size() > 62 || bits_.size() % 2 != 0)
            throw std::invalid_argument("DVector: length must be even and in [2, 62]");
        if (!satisfies_pairing(bits_)) throw std::invalid_argument("DVector: " + bits_.to_string() + " is not in B");
        packed_ = State::from_bits(bits_).value();
    }

    static DVector parse(std::string_view text) { return DVector(BitString::parse(text)); }

    /// Pairing check d_i != d_{n-i} for i = 1..(n-1)/2 (1-based).
    static bool satisfies_pairing(const BitString& d) {
        const std::size_t len = d.size();
        for (std::size_t i = 0; i < len / 2; ++i)
            if (d[i] == d[len - 1 - i]) return false;
        return len % 2 == 0;
    }

    const BitString& bits() const noexcept { return bits_; }
    /// Register order the vector belongs to.
    unsigned order() const noexcept { return static_cast<unsigned>(bits_.size() + 1); }
    std::uint64_t packed() const noexcept { return packed_; }
    std::string to_string() const { return bits_.to_string(); }

    friend bool operator==(const DVector& a, const DVector& b) { return a.bits_ == b.bits_; }

private:
    BitString bits_;
    std::uint64_t packed_ = 0;
};

/// All 2^((n-1)/2) vectors of B in lexicographic order.
inline std::vector<DVector> b_set(unsigned n) {
    if (n % 2 == 0 || n < 3 || n > 63) throw std::invalid_argument("b_set: order must be odd and in [3, 63]");
    const unsigned half = (n - 1) / 2;
    std::vector<DVector> out;
    out.reserve(std::size_t{1} << half);
    for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << half); ++prefix) {
        std::vector<Bit> d(n - 1);
        for (unsigned i = 0; i < half; ++i) {
            d[i] = static_cast<Bit>((prefix >> (half - 1 - i)) & 1);
            d[n - 2 - i] = d[i] ^ 1;
        }
        out.emplace_back(BitString(std::move(d)));
    }
    return out;
}

namespace detail {

inline bool flip_lo(std::uint64_t tail, unsigned n) { return packed_is_necklace((tail << 1) | 1, n); }

inline bool flip_hi(std::uint64_t tail, unsigned n) {
    const std::uint64_t u = (reverse_low(~tail & low_mask(n - 1), n - 1) << 1) | 1;
    return packed_is_necklace(u, n);
}

/// Unchecked rule evaluation on a packed state. `d` is ignored for
/// rho0, rho1, rho2.
inline Bit rule_bit(RuleKind rule, std::uint64_t state, unsigned n, std::uint64_t d) noexcept {
    const Bit c0 = static_cast<Bit>((state >> (n - 1)) & 1);
    const std::uint64_t tail_mask = low_mask(n - 1);
    const std::uint64_t tail = state & tail_mask;
    const unsigned w = static_cast<unsigned>(std::popcount(tail));
    const unsigned half = (n - 1) / 2;
    bool flip = false;
    switch (rule) {
        case RuleKind::rho0:
            flip = w < half && flip_lo(tail, n);
            break;
        case RuleKind::rho1:
            flip = w > half && flip_hi(tail, n);
            break;
        case RuleKind::rho2:
            flip = flip_hi(tail, n);
            break;
        case RuleKind::theorem1:
            // Middle-weight tails have no u_c; only the d comparison applies.
            if (w < half)
                flip = flip_lo(tail, n);
            else if (w > half)
                flip = flip_hi(tail, n);
            flip = flip || tail == d;
            break;
        case RuleKind::pcr4:
            if (w > half)
                flip = packed_is_necklace(tail, n);
            else if (w < half)
                flip = packed_is_necklace(reverse_low(~tail & tail_mask, n - 1), n);
            flip = flip || tail == d;
            break;
    }
    return flip ? static_cast<Bit>(c0 ^ 1) : c0;
}

inline bool needs_d(RuleKind r) { return r == RuleKind::theorem1 || r == RuleKind::pcr4; }

inline void validate_rule(RuleKind rule, unsigned n, const std::optional<DVector>& d) {
    if (rule == RuleKind::rho2) return;
    if (n % 2 == 0 || n < 3) throw std::invalid_argument(std::string(to_string(rule)) + ": order must be odd and >= 3");
    if (needs_d(rule)) {
        if (!d) throw std::invalid_argument(std::string(to_string(rule)) + ": missing d vector");
        if (d->order() != n) throw std::invalid_argument("d vector length does not match order");
    }
}

}  // namespace detail

/// Next output bit for state c. Throws on a violated weight precondition
/// (rho0 / rho1) or a missing / mismatched d.
inline Bit next_bit(RuleKind rule, const State& c, const std::optional<DVector>& d = std::nullopt) {
    const unsigned n = c.order();
    detail::validate_rule(rule, n, d);
    const unsigned half = (n - 1) / 2;
    if (rule == RuleKind::rho0 && weight(c) > half)
        throw std::invalid_argument("rho0: state weight exceeds (n-1)/2");
    if (rule == RuleKind::rho1 && weight(c) < half + 1)
        throw std::invalid_argument("rho1: state weight below (n+1)/2");
    return detail::rule_bit(rule, c.value(), n, d ? d->packed() : 0);
}

/// Streaming successor-rule generator. Holds only the current state, so
/// memory does not depend on how many bits are drawn.
class Generator {
public:
    Generator(RuleKind rule, const State& start, const std::optional<DVector>& d = std::nullopt)
        : rule_(rule), order_(start.order()), state_(start.value()), d_(d ? d->packed() : 0) {
        detail::validate_rule(rule, order_, d);
        const unsigned half = (order_ - 1) / 2;
        if (rule == RuleKind::rho0 && weight(start) > half)
            throw std::invalid_argument("rho0: start weight exceeds (n-1)/2");
        if (rule == RuleKind::rho1 && weight(start) < half + 1)
            throw std::invalid_argument("rho1: start weight below (n+1)/2");
    }

    /// Emits bit 0 of the current state and advances.
    Bit next() noexcept {
        const Bit out = static_cast<Bit>((state_ >> (order_ - 1)) & 1);
        const Bit b = detail::rule_bit(rule_, state_, order_, d_);
        state_ = ((state_ << 1) | b) & detail::low_mask(order_);
        return out;
    }

    State state() const { return State(state_, order_); }
    unsigned order() const noexcept { return order_; }

private:
    RuleKind rule_;
    unsigned order_;
    std::uint64_t state_;
    std::uint64_t d_;
};

/// Streams `count` bits of the CR de Bruijn cycle through `start` into sink(bit).
template <class Sink>
void generate(unsigned n, const DVector& d, RuleKind variant, const State& start, std::uint64_t count, Sink&& sink) {
    if (variant != RuleKind::theorem1 && variant != RuleKind::pcr4)
        throw std::invalid_argument("generate: variant must be theorem1 or pcr4");
    if (start.order() != n) throw std::invalid_argument("generate: start state length differs from order");
    Generator gen(variant, start, d);
    for (std::uint64_t i = 0; i < count; ++i) sink(gen.next());
}

/// Runs a rule from `start` until the state recurs. Throws if the cycle is
/// longer than max_period.
inline Cycle trace_cycle(RuleKind rule, const State& start, const std::optional<DVector>& d, std::size_t max_period) {
    Generator gen(rule, start, d);
    std::vector<Bit> bits;
    do {
        if (bits.size() >= max_period) throw std::logic_error("trace_cycle: period exceeds bound");
        bits.push_back(gen.next());
    } while (gen.state() != start);
    return Cycle(BitString(std::move(bits)));
}

/// One full period (2^n bits) of the bridged cycle through start.
inline Cycle generate_cycle(unsigned n, const DVector& d, RuleKind variant, const State& start) {
    if (n > 30) throw std::invalid_argument("generate_cycle: order too large to materialize");
    if (start.order() != n) throw std::invalid_argument("generate_cycle: start state length differs from order");
    if (variant != RuleKind::theorem1 && variant != RuleKind::pcr4)
        throw std::invalid_argument("generate_cycle: variant must be theorem1 or pcr4");
    return trace_cycle(variant, start, d, std::size_t{1} << n);
}

inline Cycle generate_cycle(unsigned n, const DVector& d, RuleKind variant = RuleKind::theorem1) {
    return generate_cycle(n, d, variant, State::zeros(n));
}

/// The half cycle of period 2^(n-1) produced by rho0 (low weights) or
/// rho1 (high weights).
inline Cycle generate_half(unsigned n, RuleKind side, const State& start) {
    if (side != RuleKind::rho0 && side != RuleKind::rho1)
        throw std::invalid_argument("generate_half: side must be rho0 or rho1");
    if (n > 31) throw std::invalid_argument("generate_half: order too large to materialize");
    if (start.order() != n) throw std::invalid_argument("generate_half: start state length differs from order");
    return trace_cycle(side, start, std::nullopt, std::size_t{1} << (n - 1));
}

inline Cycle generate_half(unsigned n, RuleKind side) {
    return generate_half(n, side, side == RuleKind::rho0 ? State::zeros(n) : State::ones(n));
}

}  // namespace crseq

#endif
