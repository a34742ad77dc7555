#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "crseq/analysis.hpp"
#include "crseq/successor.hpp"
#include "oracles.hpp"
#include "reference_vectors.hpp"

using namespace crseq;

TEST(DVector, PairingAndLength) {
    EXPECT_NO_THROW(DVector::parse("0011"));
    EXPECT_NO_THROW(DVector::parse("01"));
    EXPECT_THROW(DVector::parse("0110"), std::invalid_argument);
    EXPECT_THROW(DVector::parse("001"), std::invalid_argument);
    EXPECT_THROW(DVector::parse(std::string(32, '0') + std::string(32, '1')), std::invalid_argument);
    const auto d = DVector::parse("000111");
    EXPECT_EQ(d.order(), 7u);
    EXPECT_EQ(d.packed(), 0b000111u);
    EXPECT_TRUE(DVector::satisfies_pairing(BitString::parse("0101")));
    EXPECT_FALSE(DVector::satisfies_pairing(BitString::parse("0000")));
}

TEST(BSet, Order5IsLexicographic) {
    std::vector<std::string> got;
    for (const auto& d : b_set(5)) got.push_back(d.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"0011", "0101", "1010", "1100"}));
}

TEST(BSet, SizeAndMembership) {
    for (unsigned n = 3; n <= 15; n += 2) {
        const auto b = b_set(n);
        EXPECT_EQ(b.size(), 1u << ((n - 1) / 2)) << n;
        std::set<std::string> uniq;
        for (const auto& d : b) {
            EXPECT_TRUE(DVector::satisfies_pairing(d.bits()));
            uniq.insert(d.to_string());
        }
        EXPECT_EQ(uniq.size(), b.size());
    }
    EXPECT_THROW(b_set(4), std::invalid_argument);
}

TEST(Rules, ParseAndName) {
    for (auto r : {RuleKind::rho0, RuleKind::rho1, RuleKind::rho2, RuleKind::theorem1, RuleKind::pcr4})
        EXPECT_EQ(parse_rule(to_string(r)), r);
    EXPECT_THROW(parse_rule("rho3"), std::invalid_argument);
}

TEST(NextBit, DocumentedExamples) {
    EXPECT_EQ(next_bit(RuleKind::rho0, State::parse("00000")), 1);
    EXPECT_EQ(next_bit(RuleKind::rho1, State::parse("01111")), 1);
    EXPECT_EQ(next_bit(RuleKind::theorem1, State::parse("10011"), DVector::parse("0011")), 0);
}

TEST(NextBit, Preconditions) {
    EXPECT_THROW(next_bit(RuleKind::rho0, State::parse("11100")), std::invalid_argument);
    EXPECT_THROW(next_bit(RuleKind::rho1, State::parse("00011")), std::invalid_argument);
    EXPECT_THROW(next_bit(RuleKind::theorem1, State::parse("10011")), std::invalid_argument);
    EXPECT_THROW(next_bit(RuleKind::theorem1, State::parse("100110"), DVector::parse("00111")), std::invalid_argument);
    EXPECT_THROW(next_bit(RuleKind::theorem1, State::parse("1001100"), DVector::parse("0011")), std::invalid_argument);
}

TEST(NextBit, MatchesTextOracleOnEveryState) {
    for (unsigned n : {3u, 5u, 7u, 9u}) {
        for (const auto& d : b_set(n)) {
            for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                const State c(v, n);
                for (auto r : {RuleKind::theorem1, RuleKind::pcr4}) {
                    const char expect = oracle::rule_bit_text(to_string(r), c.to_string(), d.to_string());
                    ASSERT_EQ(next_bit(r, c, d), expect - '0') << to_string(r) << ' ' << c.to_string();
                }
            }
        }
    }
}

TEST(NextBit, Rho2MatchesTextOracle) {
    for (unsigned n = 2; n <= 10; ++n)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            const State c(v, n);
            ASSERT_EQ(next_bit(RuleKind::rho2, c), oracle::rule_bit_text("rho2", c.to_string(), "") - '0');
        }
}

TEST(Generator, FootprintIsFixed) {
    EXPECT_LE(sizeof(Generator), 32u);
}

TEST(Generator, FullWidthStreaming) {
    const unsigned n = 63;
    std::string d(31, '0');
    d += std::string(31, '1');
    Generator g(RuleKind::theorem1, State::zeros(n), DVector::parse(d));
    std::string first;
    for (int i = 0; i < 200; ++i) first.push_back(g.next() ? '1' : '0');
    EXPECT_EQ(first.substr(0, 63), std::string(63, '0'));
    EXPECT_EQ(first[63], '1');
    const std::string text = oracle::run_rule_text("theorem1", std::string(63, '0'), d, 200);
    EXPECT_EQ(first, text);
}

TEST(GenerateCycle, DeBruijnAndCrForAllD) {
    for (unsigned n = 3; n <= 11; n += 2) {
        for (const auto& d : b_set(n)) {
            for (auto r : {RuleKind::theorem1, RuleKind::pcr4}) {
                const Cycle c = generate_cycle(n, d, r);
                ASSERT_EQ(c.period(), 1u << n);
                EXPECT_TRUE(is_de_bruijn(c, n)) << n << ' ' << d.to_string() << ' ' << to_string(r);
                EXPECT_FALSE(cr_rotations(c).empty()) << n << ' ' << d.to_string() << ' ' << to_string(r);
            }
        }
    }
}

TEST(GenerateCycle, MatchesTextOracle) {
    for (unsigned n : {5u, 7u}) {
        for (const auto& d : b_set(n)) {
            for (auto r : {RuleKind::theorem1, RuleKind::pcr4}) {
                const auto expect = oracle::run_rule_text(to_string(r), std::string(n, '0'), d.to_string(), 1u << n);
                EXPECT_EQ(generate_cycle(n, d, r).to_string(), expect);
            }
        }
    }
}

TEST(GenerateCycle, StartStateSetsPhase) {
    const auto d = DVector::parse("0011");
    const auto c = generate_cycle(5, d, RuleKind::theorem1, State::parse("11111"));
    EXPECT_EQ(c.to_string().substr(0, 5), "11111");
    EXPECT_TRUE(shift_equivalent(c, generate_cycle(5, d)));
    EXPECT_THROW(generate_cycle(5, d, RuleKind::rho0), std::invalid_argument);
    EXPECT_THROW(generate_cycle(7, d), std::invalid_argument);
}

TEST(GenerateCycle, Order5Reference) {
    for (const auto& row : refvec::order5_rows) {
        const auto d = DVector::parse(row.d);
        const Cycle expect = Cycle::parse(row.bits);
        EXPECT_TRUE(shift_equivalent(generate_cycle(5, d, RuleKind::theorem1), expect)) << row.d;
        EXPECT_TRUE(shift_equivalent(generate_cycle(5, d, RuleKind::pcr4), expect)) << row.d;
        EXPECT_EQ(expect, cr(expect)) << row.d;
    }
}

TEST(GenerateCycle, Order7ReferenceFollowsPcr4Rule) {
    const auto d = DVector::parse(refvec::order7_d);
    const Cycle expect = Cycle::parse(refvec::order7);
    EXPECT_TRUE(shift_equivalent(generate_cycle(7, d, RuleKind::pcr4), expect));
    EXPECT_FALSE(shift_equivalent(generate_cycle(7, d, RuleKind::theorem1), expect));
}

TEST(GenerateCycle, Order9ReferenceFollowsDefaultRule) {
    const auto d = DVector::parse(refvec::order9_d);
    const Cycle expect = Cycle::parse(refvec::order9);
    EXPECT_TRUE(shift_equivalent(generate_cycle(9, d, RuleKind::theorem1), expect));
}

TEST(GenerateHalf, PeriodAndCrSymmetry) {
    for (unsigned n = 3; n <= 15; n += 2) {
        const Cycle lo = generate_half(n, RuleKind::rho0);
        const Cycle hi = generate_half(n, RuleKind::rho1);
        EXPECT_EQ(lo.period(), 1u << (n - 1));
        EXPECT_EQ(hi.period(), 1u << (n - 1));
        EXPECT_TRUE(shift_equivalent(lo, cr(hi))) << n;
        std::set<State> seen;
        for (const auto& w : windows(lo, n)) {
            EXPECT_LE(weight(w), (n - 1) / 2);
            seen.insert(w);
        }
        EXPECT_EQ(seen.size(), lo.period());
    }
    EXPECT_EQ(generate_half(3, RuleKind::rho0).to_string(), "0001");
    EXPECT_THROW(generate_half(5, RuleKind::theorem1), std::invalid_argument);
    EXPECT_THROW(generate_half(5, RuleKind::rho0, State::parse("11100")), std::invalid_argument);
}

TEST(Rho2, DeBruijnAtBothParities) {
    for (unsigned n = 2; n <= 14; ++n) {
        const Cycle c = trace_cycle(RuleKind::rho2, State::zeros(n), std::nullopt, std::size_t{1} << n);
        EXPECT_EQ(c.period(), 1u << n) << n;
        EXPECT_TRUE(is_de_bruijn(c, n)) << n;
    }
}

TEST(Generate, CountAndSink) {
    std::string out;
    generate(5, DVector::parse("0011"), RuleKind::theorem1, State::zeros(5), 70,
             [&out](Bit b) { out.push_back(b ? '1' : '0'); });
    ASSERT_EQ(out.size(), 70u);
    EXPECT_EQ(out.substr(32, 38), out.substr(0, 38));
    EXPECT_THROW(generate(5, DVector::parse("0011"), RuleKind::rho2, State::zeros(5), 1, [](Bit) {}),
                 std::invalid_argument);
}
