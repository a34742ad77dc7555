#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "crseq/pcr.hpp"
#include "oracles.hpp"

using namespace crseq;

namespace {

// Necklace count by brute force over all strings.
std::uint64_t brute_necklaces(unsigned n) {
    std::set<std::string> seen;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) seen.insert(oracle::min_rotation(State(v, n).to_string()));
    return seen.size();
}

std::multiset<State> window_multiset(const Cycle& c, unsigned n) {
    std::multiset<State> out;
    for (const auto& w : windows(c, n)) out.insert(w);
    return out;
}

}  // namespace

TEST(Pcr, ZCountSmallValues) {
    EXPECT_EQ(z_count(1), 2u);
    EXPECT_EQ(z_count(3), 4u);
    EXPECT_EQ(z_count(5), 8u);
    EXPECT_EQ(z_count(6), 14u);
    EXPECT_EQ(z_count(7), 20u);
    EXPECT_THROW(z_count(0), std::invalid_argument);
    EXPECT_THROW(z_count(64), std::invalid_argument);
}

TEST(Pcr, ZCountMatchesEnumerationAndIsEven) {
    for (unsigned n = 1; n <= 20; ++n) {
        const auto p = pcr_cycles(n);
        EXPECT_EQ(p.count(), z_count(n)) << n;
        if (n > 2) {
            EXPECT_EQ(z_count(n) % 2, 0u) << n;
        }
        EXPECT_EQ(p.state_count(), 1ull << n) << n;
        if (n <= 12) {
            EXPECT_EQ(p.count(), brute_necklaces(n)) << n;
        }
    }
    for (unsigned n = 21; n <= 63; ++n) EXPECT_EQ(z_count(n) % 2, 0u) << n;
}

TEST(Pcr, CyclesAreSortedNecklaces) {
    const auto p = pcr_cycles(6);
    for (std::size_t i = 0; i < p.count(); ++i) {
        EXPECT_TRUE(is_necklace(p.cycles[i].representative()));
        EXPECT_EQ(p.cycles[i].period(), 6u);
        EXPECT_EQ(p.weights[i], weight(p.cycles[i]));
        if (i) {
            EXPECT_LT(p.cycles[i - 1].representative(), p.cycles[i].representative());
        }
    }
}

TEST(Pcr, PartitionInvariants) {
    for (unsigned n = 1; n <= 15; n += 2) {
        const auto part = partition_by_weight(pcr_cycles(n));
        EXPECT_EQ(part.t0.size(), part.t1.size()) << n;
        EXPECT_EQ(part.t0.size() + part.t1.size(), z_count(n));
        std::set<BitString> t1;
        for (const auto& c : part.t1) t1.insert(c.representative());
        std::uint64_t states = 0;
        for (const auto& c : part.t0) {
            EXPECT_LE(weight(c), (n - 1) / 2);
            EXPECT_TRUE(t1.count(necklace_of(cr(c)))) << c.to_string();
            states += least_period(c);
        }
        EXPECT_EQ(states, 1ull << (n - 1)) << n;
    }
    EXPECT_THROW(partition_by_weight(pcr_cycles(4)), std::invalid_argument);
}

TEST(Join, MergesWindowMultisets) {
    const unsigned n = 5;
    const auto p = pcr_cycles(n);
    for (const auto& a : p.cycles) {
        for (const auto& w : windows(a, n)) {
            const State vh = conjugate(w);
            const Cycle b(necklace_of(vh.to_bitstring()));
            if (shift_equivalent(a, b)) continue;
            const Cycle a_full(BitString(std::vector<Bit>(a.representative().begin(),
                                                          a.representative().begin() + least_period(a))));
            const Cycle b_full(BitString(std::vector<Bit>(b.representative().begin(),
                                                          b.representative().begin() + least_period(b))));
            const Cycle j = join(a_full, b_full, w);
            auto expect = window_multiset(a_full, n);
            for (const auto& x : window_multiset(b_full, n)) expect.insert(x);
            EXPECT_EQ(window_multiset(j, n), expect);
            EXPECT_EQ(j.period(), a_full.period() + b_full.period());
        }
    }
}

TEST(Join, PhaseStartsAfterV) {
    const Cycle a = Cycle::parse("00001");
    EXPECT_EQ(join(a, Cycle::parse("0"), State::parse("10000")).to_string(), "100000");
    EXPECT_EQ(join(Cycle::parse("0"), a, State::parse("00000")).to_string(), "010000");
    EXPECT_THROW(join(a, a, State::parse("00001")), std::invalid_argument);
    EXPECT_THROW(join(a, Cycle::parse("11111"), State::parse("11111")), std::invalid_argument);
    EXPECT_THROW(join(a, Cycle::parse("00011"), State::parse("00010")), std::invalid_argument);
}

TEST(SpanningTree, RootedTreesOnBothSides) {
    for (unsigned n = 3; n <= 11; n += 2) {
        for (Side side : {Side::t0, Side::t1}) {
            const auto edges = spanning_edges(n, side);
            const auto chk = check_spanning_tree(n, side, edges);
            EXPECT_TRUE(chk.is_rooted_tree()) << n << ' ' << to_string(side);
            EXPECT_EQ(chk.edges + 1, chk.nodes);
            for (const auto& e : edges) EXPECT_EQ(e.v_hat, conjugate(e.v));
        }
    }
}

TEST(SpanningTree, Order5EdgesT0) {
    const auto edges = spanning_edges(5, Side::t0);
    std::map<std::string, std::string> parent;
    for (const auto& e : edges) parent[e.from_cycle.to_string()] = e.to_cycle.to_string();
    const std::map<std::string, std::string> expect{{"00001", "00000"}, {"00011", "00001"}, {"00101", "00001"}};
    EXPECT_EQ(parent, expect);
}

TEST(SpanningTree, DetectsBrokenEdgeSets) {
    auto edges = spanning_edges(7, Side::t1);
    ASSERT_FALSE(edges.empty());
    edges.pop_back();
    EXPECT_FALSE(check_spanning_tree(7, Side::t1, edges).is_rooted_tree());
    edges = spanning_edges(7, Side::t1);
    edges.push_back(edges.front());
    EXPECT_FALSE(check_spanning_tree(7, Side::t1, edges).is_rooted_tree());
    EXPECT_THROW(spanning_edges(4, Side::t0), std::invalid_argument);
}
