#ifndef CRSEQ_BITS_HPP
#define CRSEQ_BITS_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crseq {

using Bit = std::uint8_t;

namespace detail {

/// Index of the lexicographically least rotation (minimum-expression
/// two-pointer scan, linear time). `at(i)` returns the bit at position i.
template <class At>
std::size_t least_rotation(std::size_t n, At at) {
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const auto a = at((i + k) % n);
        const auto b = at((j + k) % n);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

/// Necklace test in one left-to-right pass: the string is a prenecklace
/// with period p and p divides its length.
template <class At>
bool is_necklace(std::size_t n, At at) {
    std::size_t p = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const auto prev = at(i - p);
        const auto cur = at(i);
        if (prev > cur) return false;
        if (prev < cur) p = i + 1;
    }
    return n % p == 0;
}

constexpr std::uint64_t low_mask(unsigned k) noexcept {
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

/// Reverse the low `k` bits of x.
constexpr std::uint64_t reverse_low(std::uint64_t x, unsigned k) noexcept {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

/// Necklace test on a packed word whose most significant of `n` bits is
/// position 0.
inline bool packed_is_necklace(std::uint64_t v, unsigned n) noexcept {
    return is_necklace(n, [v, n](std::size_t i) { return (v >> (n - 1 - i)) & 1; });
}

}  // namespace detail

/// Finite ordered sequence of bits; position 0 is the leftmost bit.
class BitString {
public:
    BitString(std::size_t length, Bit fill) : bits_(length, fill ? 1 : 0) { check_nonempty(); }

    explicit BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
        check_nonempty();
        for (Bit b : bits_)
            if (b > 1) throw std::invalid_argument("BitString: element is not 0 or 1");
    }

    /// Parses '0'/'1' characters; whitespace is ignored.
    static BitString parse(std::string_view text) {
        std::vector<Bit> bits;
        bits.reserve(text.size());
        for (char ch : text) {
            if (ch == '0' || ch == '1')
                bits.push_back(static_cast<Bit>(ch - '0'));
            else if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r')
                throw std::invalid_argument(std::string("BitString: unexpected character '") + ch + "'");
        }
        if (bits.empty()) throw std::invalid_argument("BitString: empty input");
        return BitString(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }
    std::span<const Bit> bits() const noexcept { return bits_; }
    auto begin() const noexcept { return bits_.begin(); }
    auto end() const noexcept { return bits_.end(); }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString& a, const BitString& b) { return a.bits_ <=> b.bits_; }

    friend BitString operator+(const BitString& a, const BitString& b) {
        std::vector<Bit> v(a.bits_);
        v.insert(v.end(), b.bits_.begin(), b.bits_.end());
        return BitString(std::move(v));
    }

private:
    void check_nonempty() const {
        if (bits_.empty()) throw std::invalid_argument("BitString: length must be at least 1");
    }

    std::vector<Bit> bits_;
};

/// A periodic binary sequence given by one phase-significant period.
/// Equality compares phases; use shift_equivalent() for classes.
class Cycle {
public:
    explicit Cycle(BitString representative) : rep_(std::move(representative)) {}
    static Cycle parse(std::string_view text) { return Cycle(BitString::parse(text)); }

    const BitString& representative() const noexcept { return rep_; }
    std::size_t period() const noexcept { return rep_.size(); }
    /// Bit at index i, taken modulo the period.
    Bit operator[](std::size_t i) const { return rep_[i % rep_.size()]; }
    std::string to_string() const { return rep_.to_string(); }

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    BitString rep_;
};

/// An n-bit register content (1 <= n <= 64), packed with c_0 as the most
/// significant bit so that integer order is lexicographic order.
class State {
public:
    State(std::uint64_t value, unsigned order) : value_(value), order_(order) {
        if (order < 1 || order > 64) throw std::invalid_argument("State: order must be in [1, 64]");
        if ((value & ~detail::low_mask(order)) != 0)
            throw std::invalid_argument("State: value has bits beyond the order");
    }

    static State zeros(unsigned order) { return State(0, order); }
    static State ones(unsigned order) { return State(detail::low_mask(order), order); }

    static State from_bits(std::span<const Bit> bits) {
        if (bits.empty() || bits.size() > 64) throw std::invalid_argument("State: length must be in [1, 64]");
        std::uint64_t v = 0;
        for (Bit b : bits) v = (v << 1) | (b & 1);
        return State(v, static_cast<unsigned>(bits.size()));
    }
    static State from_bits(const BitString& s) { return from_bits(s.bits()); }
    static State parse(std::string_view text) { return from_bits(BitString::parse(text)); }

    unsigned order() const noexcept { return order_; }
    std::uint64_t value() const noexcept { return value_; }
    Bit operator[](unsigned i) const noexcept { return static_cast<Bit>((value_ >> (order_ - 1 - i)) & 1); }
    Bit first() const noexcept { return (*this)[0]; }
    /// c_1 .. c_{n-1} packed into the low n-1 bits.
    std::uint64_t tail() const noexcept { return value_ & detail::low_mask(order_ - 1); }

    /// c_1, .., c_{n-1}, next
    State shifted(Bit next) const noexcept {
        State s = *this;
        s.value_ = ((value_ << 1) | (next & 1)) & detail::low_mask(order_);
        return s;
    }

    BitString to_bitstring() const {
        std::vector<Bit> v(order_);
        for (unsigned i = 0; i < order_; ++i) v[i] = (*this)[i];
        return BitString(std::move(v));
    }
    std::string to_string() const { return to_bitstring().to_string(); }

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State& a, const State& b) {
        if (auto c = a.order_ <=> b.order_; c != 0) return c;
        return a.value_ <=> b.value_;
    }

private:
    std::uint64_t value_;
    unsigned order_;
};

// --- complement / reverse / cr -------------------------------------------

inline BitString complement(const BitString& x) {
    std::vector<Bit> v(x.begin(), x.end());
    for (Bit& b : v) b ^= 1;
    return BitString(std::move(v));
}

inline BitString reverse(const BitString& x) {
    return BitString(std::vector<Bit>(x.bits().rbegin(), x.bits().rend()));
}

inline BitString cr(const BitString& x) { return complement(reverse(x)); }

inline Cycle complement(const Cycle& c) { return Cycle(complement(c.representative())); }
inline Cycle reverse(const Cycle& c) { return Cycle(reverse(c.representative())); }
inline Cycle cr(const Cycle& c) { return Cycle(cr(c.representative())); }

inline State complement(const State& v) { return State(v.value() ^ detail::low_mask(v.order()), v.order()); }
inline State reverse(const State& v) { return State(detail::reverse_low(v.value(), v.order()), v.order()); }
inline State cr(const State& v) { return complement(reverse(v)); }

inline std::size_t weight(const BitString& x) {
    return static_cast<std::size_t>(std::count(x.begin(), x.end(), Bit{1}));
}
inline std::size_t weight(const Cycle& c) { return weight(c.representative()); }
inline unsigned weight(const State& v) { return static_cast<unsigned>(std::popcount(v.value())); }

/// Flips bit 0.
inline State conjugate(const State& v) {
    return State(v.value() ^ (std::uint64_t{1} << (v.order() - 1)), v.order());
}
/// Flips bit n-1.
inline State companion(const State& v) { return State(v.value() ^ 1, v.order()); }

// --- rotation and necklaces ----------------------------------------------

/// L^t applied to the phase; t is reduced modulo the length.
inline BitString rotate(const BitString& x, long long t) {
    const auto n = static_cast<long long>(x.size());
    const auto shift = static_cast<std::size_t>(((t % n) + n) % n);
    std::vector<Bit> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[(i + shift) % x.size()];
    return BitString(std::move(v));
}

inline Cycle rotate(const Cycle& c, long long t) { return Cycle(rotate(c.representative(), t)); }

inline bool is_necklace(std::span<const Bit> x) {
    return detail::is_necklace(x.size(), [x](std::size_t i) { return x[i]; });
}
inline bool is_necklace(const BitString& x) { return is_necklace(x.bits()); }
inline bool is_necklace(const State& v) { return detail::packed_is_necklace(v.value(), v.order()); }

/// Offset t such that rotate(x, t) is the least rotation.
inline std::size_t least_rotation_offset(const BitString& x) {
    return detail::least_rotation(x.size(), [&x](std::size_t i) { return x[i]; });
}

inline BitString necklace_of(const BitString& x) {
    return rotate(x, static_cast<long long>(least_rotation_offset(x)));
}
inline BitString necklace_of(const Cycle& c) { return necklace_of(c.representative()); }
inline State necklace_of(const State& v) {
    const auto bits = v.to_bitstring();
    return State::from_bits(necklace_of(bits));
}

/// Smallest p dividing the stored period with rotate(c, p) == c.
inline std::size_t least_period(const Cycle& c) {
    // Border of the representative via the prefix function.
    const auto& s = c.representative();
    const std::size_t n = s.size();
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    const std::size_t p = n - pi[n - 1];
    return n % p == 0 ? p : n;
}

inline bool shift_equivalent(const Cycle& a, const Cycle& b) {
    if (a.period() != b.period()) return false;
    if (weight(a) != weight(b)) return false;
    return necklace_of(a) == necklace_of(b);
}

/// The n-bit window starting at index i (cyclic). Requires n <= 64.
inline State window(const Cycle& c, std::size_t i, unsigned n) {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < n; ++k) v = (v << 1) | c[i + k];
    return State(v, n);
}

/// Calls f(index, state) for every cyclic n-window, in index order.
template <class F>
void for_each_window(const Cycle& c, unsigned n, F&& f) {
    const std::size_t period = c.period();
    State w = window(c, 0, n);
    for (std::size_t i = 0; i < period; ++i) {
        f(i, w);
        w = w.shifted(c[i + n]);
    }
}

inline std::vector<State> windows(const Cycle& c, unsigned n) {
    std::vector<State> out;
    out.reserve(c.period());
    for_each_window(c, n, [&out](std::size_t, const State& w) { out.push_back(w); });
    return out;
}

/// First index whose n-window equals v, or npos.
inline std::size_t find_window(const Cycle& c, const State& v) {
    std::size_t found = std::string::npos;
    const std::size_t period = c.period();
    State w = window(c, 0, v.order());
    for (std::size_t i = 0; i < period; ++i) {
        if (w == v) {
            found = i;
            break;
        }
        w = w.shifted(c[i + v.order()]);
    }
    return found;
}

inline Cycle concat(const Cycle& a, const Cycle& b) { return Cycle(a.representative() + b.representative()); }

}  // namespace crseq

#endif
