#ifndef CRSEQ_PCR_HPP
#define CRSEQ_PCR_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bits.hpp"

namespace crseq {

/// Cycles of the pure cycling register of order n, one per necklace, in
/// lexicographic order. Every cycle is stored with period n.
struct PcrStructure {
    unsigned order = 0;
    std::vector<Cycle> cycles;
    std::vector<std::size_t> weights;

    std::size_t count() const noexcept { return cycles.size(); }

    /// Distinct n-windows over all cycles; equals 2^n.
    std::uint64_t state_count() const {
        std::uint64_t total = 0;
        for (const auto& c : cycles) total += least_period(c);
        return total;
    }
};

struct WeightPartition {
    unsigned order = 0;
    std::vector<Cycle> t0;  ///< weight <= (n-1)/2
    std::vector<Cycle> t1;  ///< weight >= (n+1)/2
};

enum class Side { t0, t1 };

inline const char* to_string(Side s) { return s == Side::t0 ? "t0" : "t1"; }

/// A conjugate pair (v, v_hat) used as a tree edge. `from_cycle` holds v and
/// `to_cycle` holds v_hat; cycles are identified by their necklaces.
struct ConjugatePairEdge {
    State v;
    State v_hat;
    BitString from_cycle;
    BitString to_cycle;
};

namespace detail {

inline void require_odd_order(unsigned n, unsigned min_order, const char* who) {
    if (n % 2 == 0 || n < min_order)
        throw std::invalid_argument(std::string(who) + ": order must be odd and >= " + std::to_string(min_order));
}

inline std::uint64_t totient(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace detail

/// Number of PCR cycles (binary necklaces) of length n.
inline std::uint64_t z_count(unsigned n) {
    if (n < 1 || n > 63) throw std::invalid_argument("z_count: order must be in [1, 63]");
    unsigned __int128 sum = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += static_cast<unsigned __int128>(detail::totient(d)) << (n / d);
    return static_cast<std::uint64_t>(sum / n);
}

/// Enumerates the necklaces of length n (FKM order). Practical up to n ~ 26.
inline PcrStructure pcr_cycles(unsigned n) {
    if (n < 1 || n > 30) throw std::invalid_argument("pcr_cycles: order must be in [1, 30]");
    PcrStructure out;
    out.order = n;
    std::vector<Bit> a(n, 0);
    auto emit = [&] {
        out.cycles.emplace_back(BitString(a));
        out.weights.push_back(weight(out.cycles.back()));
    };
    emit();
    for (;;) {
        std::size_t i = n;
        while (i > 0 && a[i - 1] == 1) --i;
        if (i == 0) break;
        a[i - 1] = 1;
        for (std::size_t j = i; j < n; ++j) a[j] = a[j - i];
        if (n % i == 0) emit();
    }
    return out;
}

inline WeightPartition partition_by_weight(const PcrStructure& p) {
    detail::require_odd_order(p.order, 1, "partition_by_weight");
    const std::size_t half = (p.order - 1) / 2;
    WeightPartition out;
    out.order = p.order;
    for (std::size_t i = 0; i < p.cycles.size(); ++i)
        (p.weights[i] <= half ? out.t0 : out.t1).push_back(p.cycles[i]);
    return out;
}

/// Joins two cycles by exchanging the successors of v (in a) and its
/// conjugate (in b). The result starts with a's bit after v, runs once
/// around a, then once around b starting after conjugate(v).
inline Cycle join(const Cycle& a, const Cycle& b, const State& v) {
    const State v_hat = conjugate(v);
    const std::size_t i = find_window(a, v);
    if (i == std::string::npos) throw std::invalid_argument("join: state " + v.to_string() + " is not in the first cycle");
    const std::size_t j = find_window(b, v_hat);
    if (j == std::string::npos)
        throw std::invalid_argument("join: conjugate " + v_hat.to_string() + " is not in the second cycle");
    if (shift_equivalent(a, b)) throw std::invalid_argument("join: cycles are shift equivalent");

    const unsigned n = v.order();
    std::vector<Bit> bits;
    bits.reserve(a.period() + b.period());
    for (std::size_t k = 0; k < a.period(); ++k) bits.push_back(a[i + n + k]);
    for (std::size_t k = 0; k < b.period(); ++k) bits.push_back(b[j + n + k]);
    return Cycle(BitString(std::move(bits)));
}

/// Conjugate pairs selected by the first condition of the low-weight rule
/// (side t0) or of the high-weight rule (side t1). Edges point from the
/// cycle holding v toward the cycle one weight step closer to the root.
inline std::vector<ConjugatePairEdge> spanning_edges(unsigned n, Side side) {
    detail::require_odd_order(n, 3, "spanning_edges");
    const std::size_t half = (n - 1) / 2;
    const auto part = partition_by_weight(pcr_cycles(n));
    const auto& cycles = side == Side::t0 ? part.t0 : part.t1;
    const std::uint64_t tail_mask = detail::low_mask(n - 1);

    std::vector<ConjugatePairEdge> edges;
    for (const auto& cyc : cycles) {
        const std::size_t p = least_period(cyc);
        for (std::size_t r = 0; r < p; ++r) {
            const State c = window(cyc, r, n);
            const std::uint64_t tail = c.tail();
            const auto w = static_cast<std::size_t>(std::popcount(tail));
            bool selected = false;
            if (side == Side::t0) {
                // v = 1 c_1..c_{n-1}; the edge runs to 0 c_1..c_{n-1}.
                selected = c.first() == 1 && w < half && detail::packed_is_necklace((tail << 1) | 1, n);
            } else {
                // v = 0 c_1..c_{n-1}; the edge runs to 1 c_1..c_{n-1}.
                const std::uint64_t u = (detail::reverse_low(~tail & tail_mask, n - 1) << 1) | 1;
                selected = c.first() == 0 && w > half && detail::packed_is_necklace(u, n);
            }
            if (!selected) continue;
            const State v_hat = conjugate(c);
            edges.push_back({c, v_hat, cyc.representative(), necklace_of(v_hat.to_bitstring())});
        }
    }
    return edges;
}

/// Structural facts about an edge set over one side of the partition.
struct TreeCheck {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    bool single_out_edge = false;   ///< each non-root has exactly one outgoing edge, root none
    bool weight_steps = false;      ///< every edge moves one weight step toward the root
    bool acyclic = false;
    bool connected = false;

    bool is_rooted_tree() const noexcept { return single_out_edge && weight_steps && acyclic && connected; }
};

inline TreeCheck check_spanning_tree(unsigned n, Side side, const std::vector<ConjugatePairEdge>& edges) {
    detail::require_odd_order(n, 3, "check_spanning_tree");
    const auto part = partition_by_weight(pcr_cycles(n));
    const auto& cycles = side == Side::t0 ? part.t0 : part.t1;
    const BitString root = side == Side::t0 ? BitString(n, 0) : BitString(n, 1);

    std::map<BitString, std::size_t> index;
    for (const auto& c : cycles) index.emplace(c.representative(), index.size());

    TreeCheck out;
    out.nodes = cycles.size();
    out.edges = edges.size();

    std::vector<std::size_t> out_degree(cycles.size(), 0);
    std::vector<std::size_t> parent(cycles.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    bool steps = true, acyclic = true, known = true;
    for (const auto& e : edges) {
        auto from = index.find(e.from_cycle);
        auto to = index.find(e.to_cycle);
        if (from == index.end() || to == index.end()) {
            known = false;
            continue;
        }
        ++out_degree[from->second];
        const auto wf = weight(e.from_cycle), wt = weight(e.to_cycle);
        steps = steps && (side == Side::t0 ? wt + 1 == wf : wf + 1 == wt);
        const auto ra = find(from->second), rb = find(to->second);
        if (ra == rb)
            acyclic = false;
        else
            parent[ra] = rb;
    }

    bool single = known;
    for (const auto& [neck, idx] : index) single = single && out_degree[idx] == (neck == root ? 0u : 1u);

    std::size_t components = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (find(i) == i) ++components;

    out.single_out_edge = single;
    out.weight_steps = steps && known;
    out.acyclic = acyclic;
    out.connected = components == 1;
    return out;
}

}  // namespace crseq

#endif
