#ifndef CRSEQ_ANALYSIS_HPP
#define CRSEQ_ANALYSIS_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "pcr.hpp"

namespace crseq {

/// True iff the period is 2^n and all cyclic n-windows are distinct.
inline bool is_de_bruijn(const Cycle& c, unsigned n) {
    if (n < 1 || n > 30) return false;
    if (c.period() != (std::size_t{1} << n)) return false;
    std::vector<bool> seen(c.period(), false);
    bool ok = true;
    for_each_window(c, n, [&](std::size_t, const State& w) {
        if (seen[w.value()]) ok = false;
        seen[w.value()] = true;
    });
    return ok;
}

/// All t in [0, period) such that rotate(c, t) equals its own cr image
/// pointwise. Linear time: rotate(c, t) is exact-CR iff c == rotate(cr c, -2t).
inline std::vector<std::size_t> cr_rotations(const Cycle& c) {
    const std::size_t n = c.period();
    const BitString& s = c.representative();
    const BitString r = cr(s);

    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    // hit[k]: rotate(r, k) == s
    std::vector<bool> hit(n, false);
    std::size_t q = 0;
    for (std::size_t i = 0; i + 1 < 2 * n; ++i) {
        const Bit b = r[i % n];
        while (q > 0 && s[q] != b) q = pi[q - 1];
        if (s[q] == b) ++q;
        if (q == n) {
            hit[(i + 1 - n) % n] = true;
            q = pi[q - 1];
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < n; ++t)
        if (hit[(n - (2 * t) % n) % n]) out.push_back(t);
    return out;
}

struct Subparity {
    Bit even = 0;  ///< a_0 + a_2 + ... mod 2
    Bit odd = 0;   ///< a_1 + a_3 + ... mod 2
    friend bool operator==(const Subparity&, const Subparity&) = default;
};

namespace detail {
inline void require_power_of_two(const Cycle& c, const char* who) {
    if (!std::has_single_bit(c.period())) throw std::invalid_argument(std::string(who) + ": period is not a power of 2");
}
}  // namespace detail

inline Subparity subparity(const Cycle& c) {
    detail::require_power_of_two(c, "subparity");
    Subparity sp;
    for (std::size_t i = 0; i < c.period(); ++i) (i % 2 == 0 ? sp.even : sp.odd) ^= c[i];
    return sp;
}

/// Games-Chan linear complexity for period 2^k. The all-zero cycle has 0.
inline std::size_t games_chan_lc(const Cycle& c) {
    detail::require_power_of_two(c, "games_chan_lc");
    std::vector<Bit> a(c.representative().begin(), c.representative().end());
    std::size_t lc = 0;
    while (a.size() > 1) {
        const std::size_t h = a.size() / 2;
        std::vector<Bit> b(h);
        bool nonzero = false;
        for (std::size_t i = 0; i < h; ++i) {
            b[i] = a[i] ^ a[i + h];
            nonzero = nonzero || b[i];
        }
        if (nonzero) {
            lc += h;
            a = std::move(b);
        } else {
            a.resize(h);
        }
    }
    return lc + a[0];
}

struct CrReport {
    bool is_de_bruijn = false;
    std::vector<std::size_t> cr_rotations;
    std::optional<std::size_t> linear_complexity;  ///< set for power-of-2 periods
    std::optional<Subparity> subparity;
};

inline CrReport cr_report(const Cycle& c, unsigned n) {
    CrReport r;
    r.is_de_bruijn = is_de_bruijn(c, n);
    r.cr_rotations = cr_rotations(c);
    if (std::has_single_bit(c.period())) {
        r.linear_complexity = games_chan_lc(c);
        r.subparity = subparity(c);
    }
    return r;
}

// --- halves -------------------------------------------------------------

/// s (rotated by rotation_used) == half followed by cr(half), and the
/// all-zero window lies on half. join_point is the state of half whose
/// conjugate pair with cr(half) produces that phase.
struct HalfDecomposition {
    Cycle full;
    Cycle half;
    std::size_t rotation_used = 0;
    State join_point;
};

namespace detail {

inline bool tail_is_paired(const State& v) {
    const unsigned n = v.order();
    for (unsigned i = 1; i <= (n - 1) / 2; ++i)
        if (v[i] == v[n - i]) return false;
    return true;
}

inline Cycle first_half(const Cycle& c) {
    const auto bits = c.representative().bits().first(c.period() / 2);
    return Cycle(BitString(std::vector<Bit>(bits.begin(), bits.end())));
}

inline void require_cr_half(const Cycle& half, unsigned n, const char* who) {
    require_odd_order(n, 3, who);
    if (!is_de_bruijn(concat(half, cr(half)), n))
        throw std::invalid_argument(std::string(who) + ": (S crS) is not a de Bruijn sequence");
}

}  // namespace detail

/// Join point of (S crS): the window of S starting N - (n+1)/2 bits in.
inline State half_join_point(const Cycle& half, unsigned n) {
    return window(half, half.period() - (n + 1) / 2, n);
}

inline HalfDecomposition extract_half(const Cycle& s, unsigned n) {
    detail::require_odd_order(n, 3, "extract_half");
    if (!is_de_bruijn(s, n)) throw std::invalid_argument("extract_half: input is not de Bruijn");
    const auto rots = cr_rotations(s);
    if (rots.empty()) throw std::invalid_argument("extract_half: input has no exact-CR rotation");
    const State zeros = State::zeros(n);
    for (std::size_t t : rots) {
        Cycle full = rotate(s, static_cast<long long>(t));
        Cycle half = detail::first_half(full);
        if (find_window(half, zeros) == std::string::npos) continue;
        State v = half_join_point(half, n);
        return {std::move(full), std::move(half), t, v};
    }
    throw std::logic_error("extract_half: no CR rotation places 0^n in the first half");
}

/// Windows of S whose tail satisfies c_i = complement(c_{n-i}), in order
/// of position, paired with that position.
inline std::vector<std::pair<std::size_t, State>> special_windows(const Cycle& half, unsigned n) {
    detail::require_cr_half(half, n, "special_states");
    std::vector<std::pair<std::size_t, State>> out;
    for_each_window(half, n, [&](std::size_t i, const State& w) {
        if (detail::tail_is_paired(w)) out.emplace_back(i, w);
    });
    return out;
}

inline std::vector<State> special_states(const Cycle& half, unsigned n) {
    std::vector<State> out;
    for (auto& [pos, v] : special_windows(half, n)) out.push_back(v);
    return out;
}

/// One CR de Bruijn cycle per special state: (L^t S, cr L^t S) with the
/// special state straddling the end of L^t S.
inline std::vector<Cycle> rejoin_all(const Cycle& half, unsigned n) {
    std::vector<Cycle> out;
    for (auto& [pos, v] : special_windows(half, n)) {
        Cycle shifted = rotate(half, static_cast<long long>(pos + (n + 1) / 2));
        out.push_back(concat(shifted, cr(shifted)));
    }
    return out;
}

/// Windows that read the same forwards and backwards.
inline std::size_t symmetric_window_count(const Cycle& c, unsigned n) {
    std::size_t count = 0;
    for_each_window(c, n, [&](std::size_t, const State& w) {
        if (reverse(w) == w) ++count;
    });
    return count;
}

// --- run operators -------------------------------------------------------

namespace detail {

struct Run {
    Bit bit;
    std::size_t length;
    bool modified = false;
};

/// Maximal cyclic runs, listed from the first run boundary at or after 0.
struct RunList {
    std::size_t start = 0;
    std::size_t period = 0;
    std::vector<Run> runs;
};

inline RunList runs_of(const Cycle& c) {
    const std::size_t n = c.period();
    RunList out;
    out.period = n;
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] != c[i + n - 1]) {
            start = i;
            break;
        }
    }
    if (start == n) throw std::invalid_argument("constant sequence has no run boundaries");
    out.start = start;
    for (std::size_t k = 0; k < n;) {
        const Bit b = c[start + k];
        std::size_t len = 0;
        while (k + len < n && c[start + k + len] == b) ++len;
        out.runs.push_back({b, len});
        k += len;
    }
    return out;
}

/// Rebuilds the cycle. It starts at the original index 0 when the run
/// covering it is untouched, otherwise at the run boundary after it.
inline Cycle rebuild(const RunList& rl) {
    std::vector<Bit> bits;
    for (const auto& r : rl.runs) bits.insert(bits.end(), r.length, r.bit);
    Cycle out{BitString(std::move(bits))};
    if (rl.start != 0 && !rl.runs.back().modified)
        out = rotate(out, static_cast<long long>(out.period()) - static_cast<long long>(rl.start));
    return out;
}

inline std::vector<std::size_t> find_runs(const RunList& rl, Bit bit, std::size_t length) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rl.runs.size(); ++i)
        if (rl.runs[i].bit == bit && rl.runs[i].length == length) idx.push_back(i);
    return idx;
}

inline Cycle swap_runs(const Cycle& s, unsigned n, Bit bit, const char* who) {
    if (n < 3) throw std::invalid_argument(std::string(who) + ": order must be >= 3");
    RunList rl = runs_of(s);
    const auto longest = find_runs(rl, bit, n);
    const auto shorter = find_runs(rl, bit, n - 2);
    if (longest.size() != 1 || shorter.size() != 1)
        throw std::invalid_argument(std::string(who) + ": unique runs of length n and n-2 are required");
    rl.runs[longest[0]].length = n - 2;
    rl.runs[shorter[0]].length = n;
    rl.runs[longest[0]].modified = rl.runs[shorter[0]].modified = true;
    return rebuild(rl);
}

}  // namespace detail

/// Interchanges the runs of n and n-2 zeroes.
inline Cycle op_z(const Cycle& s, unsigned n) { return detail::swap_runs(s, n, 0, "op_z"); }
/// Interchanges the runs of n and n-2 ones.
inline Cycle op_u(const Cycle& s, unsigned n) { return detail::swap_runs(s, n, 1, "op_u"); }

/// Deletes two bits from each run of exactly n zeroes / n ones. A full de
/// Bruijn sequence has both runs; a CR half has only the one on its side,
/// so at least one is required.
inline Cycle op_d(const Cycle& s, unsigned n) {
    if (n < 3) throw std::invalid_argument("op_d: order must be >= 3");
    detail::RunList rl = detail::runs_of(s);
    std::size_t hits = 0;
    for (Bit bit : {Bit{0}, Bit{1}}) {
        const auto idx = detail::find_runs(rl, bit, n);
        if (idx.size() > 1) throw std::invalid_argument("op_d: run of length n is not unique");
        for (std::size_t i : idx) {
            rl.runs[i].length -= 2;
            rl.runs[i].modified = true;
            ++hits;
        }
    }
    if (hits == 0) throw std::invalid_argument("op_d: no run of n zeroes or n ones");
    return detail::rebuild(rl);
}

inline constexpr std::array<const char*, 8> g1_labels{"e", "r", "z", "u", "rz", "ru", "zu", "rzu"};

/// Images of s under e, r, z, u, rz, ru, zu, rzu (composition applies the
/// rightmost operator first).
inline std::vector<Cycle> g1_orbit(const Cycle& s) {
    const auto n = static_cast<unsigned>(std::countr_zero(s.period()));
    if (!is_de_bruijn(s, n)) throw std::invalid_argument("g1_orbit: input is not de Bruijn");
    if (n < 5) throw std::invalid_argument("g1_orbit: order must be >= 5");
    const Cycle z = op_z(s, n), u = op_u(s, n), zu = op_z(u, n);
    return {s, reverse(s), z, u, reverse(z), reverse(u), zu, reverse(zu)};
}

/// Half decomposition of s' = uz s, with the structural relations between
/// s, s', S and S' verified (std::logic_error if one fails).
inline HalfDecomposition s_prime(const Cycle& s, unsigned n) {
    if (n < 5) throw std::invalid_argument("s_prime: order must be >= 5");
    const HalfDecomposition base = extract_half(s, n);
    const Cycle sp = op_u(op_z(s, n), n);
    if (!is_de_bruijn(sp, n) || cr_rotations(sp).empty())
        throw std::logic_error("s_prime: uz s is not a CR de Bruijn sequence");
    HalfDecomposition prime = extract_half(sp, n);

    const Cycle d_prime = op_d(prime.half, n);
    if (!shift_equivalent(d_prime, op_d(base.half, n)) && !shift_equivalent(d_prime, op_d(cr(base.half), n)))
        throw std::logic_error("s_prime: dS' is neither dS nor dcrS");
    const Cycle ds = op_d(s, n);
    if (!shift_equivalent(ds, op_d(sp, n)) || cr_rotations(ds).empty())
        throw std::logic_error("s_prime: ds and ds' differ or are not CR");
    return prime;
}

}  // namespace crseq

#endif
