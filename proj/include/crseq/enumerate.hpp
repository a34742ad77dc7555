#ifndef CRSEQ_ENUMERATE_HPP
#define CRSEQ_ENUMERATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "bits.hpp"

namespace crseq {

inline constexpr unsigned default_enum_cap = 5;
inline constexpr unsigned max_enum_cap = 6;

namespace detail {

inline void require_enum_order(unsigned n, unsigned cap) {
    if (cap > max_enum_cap) throw std::invalid_argument("enumeration cap cannot exceed " + std::to_string(max_enum_cap));
    if (n < 2 || n > cap)
        throw std::invalid_argument("enumeration order must be in [2, " + std::to_string(cap) + "]");
}

/// Depth-first extension over the order-n de Bruijn graph. Windows are
/// at most 6 bits, so the visited set is one 64-bit word.
template <class Visit>
class DeBruijnSearch {
public:
    DeBruijnSearch(unsigned n, Visit& visit) : n_(n), length_(std::size_t{1} << n), visit_(visit) {}

    void run() {
        // Canonical phase: the class representative starts with 0^n.
        len_ = n_;
        seq_.fill(0);
        visited_ = 1;  // window 0^n
        extend(0);
    }

private:
    void extend(std::uint64_t last) {
        const std::uint64_t mask = low_mask(n_);
        if (len_ == length_) {
            close_and_visit(last);
            return;
        }
        for (Bit b : {Bit{0}, Bit{1}}) {
            const std::uint64_t w = ((last << 1) | b) & mask;
            if (visited_ & (std::uint64_t{1} << w)) continue;
            visited_ |= std::uint64_t{1} << w;
            seq_[len_++] = b;
            extend(w);
            --len_;
            visited_ &= ~(std::uint64_t{1} << w);
        }
    }

    void close_and_visit(std::uint64_t last) {
        // The n-1 windows that wrap around the end must be new and distinct.
        const std::uint64_t mask = low_mask(n_);
        std::uint64_t seen = visited_;
        std::uint64_t w = last;
        for (unsigned k = 0; k + 1 < n_; ++k) {
            w = ((w << 1) | seq_[k]) & mask;
            if (seen & (std::uint64_t{1} << w)) return;
            seen |= std::uint64_t{1} << w;
        }
        visit_(Cycle(BitString(std::vector<Bit>(seq_.begin(), seq_.begin() + static_cast<long>(length_)))));
    }

    unsigned n_;
    std::size_t length_;
    Visit& visit_;
    std::array<Bit, 64> seq_{};
    std::size_t len_ = 0;
    std::uint64_t visited_ = 0;
};

}  // namespace detail

/// Streams every de Bruijn class of order n exactly once, in canonical
/// phase (starting with 0^n), in lexicographic order.
template <class Visit>
void for_each_de_bruijn(unsigned n, Visit&& visit, unsigned cap = default_enum_cap) {
    detail::require_enum_order(n, cap);
    auto& v = visit;
    detail::DeBruijnSearch<std::remove_reference_t<Visit>> search(n, v);
    search.run();
}

inline std::vector<Cycle> all_de_bruijn(unsigned n, unsigned cap = default_enum_cap) {
    std::vector<Cycle> out;
    for_each_de_bruijn(n, [&out](Cycle c) { out.push_back(std::move(c)); }, cap);
    return out;
}

/// 2^(2^(n-1) - n), for n in [1, 7].
inline std::uint64_t de_bruijn_count(unsigned n) {
    if (n < 1 || n > 7) throw std::invalid_argument("de_bruijn_count: order must be in [1, 7]");
    return std::uint64_t{1} << ((std::uint64_t{1} << (n - 1)) - n);
}

struct Census {
    unsigned order = 0;
    std::uint64_t total = 0;
    std::uint64_t cr_count = 0;
    std::map<std::size_t, std::uint64_t> gamma;     ///< linear complexity -> classes
    std::map<std::size_t, std::uint64_t> gamma_cr;  ///< same, CR classes only

    std::uint64_t gamma_at(std::size_t c) const {
        auto it = gamma.find(c);
        return it == gamma.end() ? 0 : it->second;
    }
};

/// Folds one class into a census.
inline void census_add(Census& census, const Cycle& c) {
    const std::size_t lc = games_chan_lc(c);
    ++census.total;
    ++census.gamma[lc];
    if (!cr_rotations(c).empty()) {
        ++census.cr_count;
        ++census.gamma_cr[lc];
    }
}

inline Census census(unsigned n, unsigned cap = default_enum_cap) {
    Census out;
    out.order = n;
    for_each_de_bruijn(n, [&out](const Cycle& c) { census_add(out, c); }, cap);
    return out;
}

/// CR classes of order n, each in canonical phase.
inline std::vector<Cycle> cr_classes(unsigned n, unsigned cap = default_enum_cap) {
    std::vector<Cycle> out;
    for_each_de_bruijn(n, [&out](Cycle c) {
        if (!cr_rotations(c).empty()) out.push_back(std::move(c));
    }, cap);
    return out;
}

/// Orbits of the CR classes under rejoining applied to S, rS, S', rS'.
struct ClosureReport {
    unsigned order = 0;
    std::uint64_t cr_count = 0;
    std::size_t expected_orbit_size = 0;   ///< 2^((n+3)/2)
    std::vector<std::size_t> orbit_sizes;  ///< ascending
    bool partitions = false;               ///< orbits are disjoint and cover every CR class
    bool reproduces_original = false;      ///< each class appears in the rejoins of its own half

    bool all_full() const {
        return !orbit_sizes.empty() && std::all_of(orbit_sizes.begin(), orbit_sizes.end(),
                                                   [this](std::size_t s) { return s == expected_orbit_size; });
    }
    bool ok() const { return partitions && reproduces_original && all_full(); }
};

/// For n = 3 the S' construction does not apply and only S, rS are used.
inline ClosureReport cr_closure_check(unsigned n) {
    detail::require_odd_order(n, 3, "cr_closure_check");
    if (n > default_enum_cap) throw std::invalid_argument("cr_closure_check: order above enumeration cap");
    const auto classes = cr_classes(n);

    ClosureReport rep;
    rep.order = n;
    rep.cr_count = classes.size();
    rep.expected_orbit_size = std::size_t{1} << ((n + 3) / 2);
    rep.reproduces_original = true;

    std::set<BitString> all;
    for (const auto& c : classes) all.insert(necklace_of(c));

    std::set<std::set<BitString>> orbits;
    for (const auto& s : classes) {
        const auto dec = extract_half(s, n);
        std::vector<Cycle> halves{dec.half, reverse(dec.half)};
        if (n >= 5) {
            const auto prime = s_prime(s, n);
            halves.push_back(prime.half);
            halves.push_back(reverse(prime.half));
        }
        std::set<BitString> orbit;
        for (const auto& h : halves)
            for (const auto& j : rejoin_all(h, n)) orbit.insert(necklace_of(j));
        bool found = false;
        for (const auto& j : rejoin_all(dec.half, n)) found = found || shift_equivalent(j, s);
        rep.reproduces_original = rep.reproduces_original && found;
        orbits.insert(std::move(orbit));
    }

    std::set<BitString> covered;
    std::size_t total = 0;
    for (const auto& o : orbits) {
        rep.orbit_sizes.push_back(o.size());
        total += o.size();
        covered.insert(o.begin(), o.end());
    }
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    rep.partitions = total == covered.size() && covered == all;
    return rep;
}

}  // namespace crseq

#endif
