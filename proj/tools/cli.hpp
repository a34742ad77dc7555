#ifndef CRSEQ_TOOLS_CLI_HPP
#define CRSEQ_TOOLS_CLI_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crseq/crseq.hpp"

namespace crseq::cli {

/// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
/// parse error.
enum Exit : int { kOk = 0, kPropertyFails = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr const char* kFormatHelp =
    "ascii01 (default; '0'/'1' text), hex (4 bits per digit, first bit most significant), "
    "packed-bits (raw bytes, bit i in byte i/8 at bit i%8, i.e. little-endian within bytes)";

inline BitString read_input(const std::string& path, std::istream& in, const std::string& format,
                            std::optional<std::size_t> length) {
    const OutputFormat fmt = parse_format(format);
    if (path.empty() || path == "-") return read_bits(in, fmt, length);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return read_bits(file, fmt, length);
}

inline unsigned infer_order(const Cycle& c, std::optional<unsigned> order) {
    if (order) return *order;
    if (!std::has_single_bit(c.period())) throw UsageError("period is not a power of 2; pass -n");
    return static_cast<unsigned>(std::countr_zero(c.period()));
}

inline unsigned enum_cap_from_env() {
    const char* raw = std::getenv("CRSEQ_ENUM_CAP");
    if (raw == nullptr || *raw == '\0') return default_enum_cap;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 2 || v > static_cast<long>(max_enum_cap))
        throw UsageError("CRSEQ_ENUM_CAP must be an integer in [2, " + std::to_string(max_enum_cap) + "]");
    return static_cast<unsigned>(v);
}

struct GenArgs {
    unsigned order = 0;
    std::string d;
    std::string rule = "theorem1";
    std::string start;
    std::optional<std::uint64_t> count;
    std::string format = "ascii01";
    std::string phase = "none";
};

inline int cmd_gen(const GenArgs& a, std::ostream& out) {
    if (a.order % 2 == 0 || a.order < 3 || a.order > 63) throw UsageError("order must be odd and in [3, 63]");
    const RuleKind rule = parse_rule(a.rule);
    if (rule != RuleKind::theorem1 && rule != RuleKind::pcr4) throw UsageError("rule must be theorem1 or pcr4");
    const DVector d = DVector::parse(a.d);
    if (d.order() != a.order) throw UsageError("d must have n-1 bits");
    const State start = a.start.empty() ? State::zeros(a.order) : State::parse(a.start);
    if (start.order() != a.order) throw UsageError("start state must have n bits");
    const OutputFormat fmt = parse_format(a.format);

    if (a.phase == "exact-cr") {
        if (a.count) throw UsageError("--phase exact-cr prints one full period; drop --count");
        if (a.order > 25) throw UsageError("--phase exact-cr needs order <= 25");
        const Cycle c = generate_cycle(a.order, d, rule, start);
        const auto rots = cr_rotations(c);
        if (rots.empty()) throw std::logic_error("generated cycle has no exact-CR rotation");
        write_bits(out, rotate(c, static_cast<long long>(rots.front())).representative(), fmt);
        return kOk;
    }
    if (a.phase != "none") throw UsageError("--phase must be none or exact-cr");

    const std::uint64_t count = a.count.value_or(std::uint64_t{1} << a.order);
    BitWriter w(out, fmt);
    generate(a.order, d, rule, start, count, [&w](Bit b) { w.put(b); });
    w.finish();
    return kOk;
}

struct InputArgs {
    std::string file;
    std::optional<unsigned> order;
    std::string format = "ascii01";
    std::optional<std::size_t> length;
};

inline int cmd_verify(const InputArgs& a, std::istream& in, std::ostream& out) {
    const Cycle c(read_input(a.file, in, a.format, a.length));
    std::optional<unsigned> n = a.order;
    if (!n && std::has_single_bit(c.period())) n = static_cast<unsigned>(std::countr_zero(c.period()));
    const bool db = n && is_de_bruijn(c, *n);
    const auto rots = cr_rotations(c);
    const auto ones = weight(c);

    out << "period: " << c.period() << "\n";
    out << "order: " << (n ? std::to_string(*n) : std::string("unknown")) << "\n";
    out << "de Bruijn: " << (db ? "yes" : "no") << "\n";
    out << "CR: " << (rots.empty() ? "no" : "yes") << "\n";
    out << "exact-CR rotations:";
    if (rots.empty()) out << " none";
    for (auto t : rots) out << ' ' << t;
    out << "\n";
    out << "weight: " << ones << " ones, " << c.period() - ones << " zeros ("
        << (2 * ones == c.period() ? "balanced" : "unbalanced") << ")\n";
    return db && !rots.empty() ? kOk : kPropertyFails;
}

inline int cmd_lc(const InputArgs& a, std::istream& in, std::ostream& out) {
    const Cycle c(read_input(a.file, in, a.format, a.length));
    if (!std::has_single_bit(c.period())) throw UsageError("period " + std::to_string(c.period()) + " is not a power of 2");
    const auto sp = subparity(c);
    out << "linear complexity: " << games_chan_lc(c) << "\n";
    out << "subparity: " << int(sp.even) << ' ' << int(sp.odd) << "\n";
    return kOk;
}

struct EnumArgs {
    unsigned order = 0;
    bool cr_only = false;
    bool gamma = false;
};

inline int cmd_enum(const EnumArgs& a, std::ostream& out) {
    const unsigned cap = enum_cap_from_env();
    if (a.order < 2 || a.order > cap)
        throw UsageError("order must be in [2, " + std::to_string(cap) + "] (raise with CRSEQ_ENUM_CAP, max " +
                         std::to_string(max_enum_cap) + ")");
    if (a.gamma) {
        const Census c = census(a.order, cap);
        out << "# complexity\tcount\tcr_count\n";
        for (const auto& [lc, count] : c.gamma) {
            auto it = c.gamma_cr.find(lc);
            out << lc << '\t' << count << '\t' << (it == c.gamma_cr.end() ? 0 : it->second) << "\n";
        }
        out << "# total\t" << c.total << '\t' << c.cr_count << "\n";
        return kOk;
    }
    out << "# sequence\tcomplexity\tcr\n";
    std::uint64_t total = 0, crs = 0, listed = 0;
    for_each_de_bruijn(a.order, [&](const Cycle& c) {
        const bool is_cr = !cr_rotations(c).empty();
        ++total;
        crs += is_cr;
        if (a.cr_only && !is_cr) return;
        ++listed;
        out << c.to_string() << '\t' << games_chan_lc(c) << '\t' << (is_cr ? 1 : 0) << "\n";
    }, cap);
    out << "# order=" << a.order << " total=" << total << " cr=" << crs << " listed=" << listed << "\n";
    return kOk;
}

inline int cmd_graph(unsigned order, const std::string& side, std::ostream& out) {
    if (order % 2 == 0 || order < 3 || order > 15) throw UsageError("order must be odd and in [3, 15]");
    if (side != "t0" && side != "t1") throw UsageError("--side must be t0 or t1");
    write_spanning_tree_dot(out, order, side == "t0" ? Side::t0 : Side::t1);
    return kOk;
}

inline int cmd_ops(const InputArgs& a, const std::string& op, std::istream& in, std::ostream& out) {
    const Cycle c(read_input(a.file, in, a.format, a.length));
    const OutputFormat fmt = parse_format(a.format);
    if (op == "g1") {
        if (a.order && *a.order != infer_order(c, std::nullopt)) throw UsageError("-n does not match the period");
        const auto orbit = g1_orbit(c);
        for (std::size_t i = 0; i < orbit.size(); ++i) out << g1_labels[i] << '\t' << orbit[i].to_string() << "\n";
        return kOk;
    }
    Cycle r = c;
    if (op == "r") {
        r = reverse(c);
    } else if (op == "c") {
        r = complement(c);
    } else if (op == "cr") {
        r = cr(c);
    } else {
        const unsigned n = infer_order(c, a.order);
        if (n < 2 || n > 63) throw UsageError("order must be in [2, 63]");
        if (op == "z") r = op_z(c, n);
        else if (op == "u") r = op_u(c, n);
        else if (op == "d") r = op_d(c, n);
        else if (op == "uz") r = op_u(op_z(c, n), n);
        else throw UsageError("unknown op '" + op + "'");
    }
    write_bits(out, r.representative(), fmt);
    return kOk;
}

}  // namespace detail

/// Entry point shared by the binary and in-process tests.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complement-reverse de Bruijn sequence toolkit"};
    app.name("crseq");
    app.require_subcommand(1);

    detail::GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Stream a CR de Bruijn sequence of odd order n");
    gen_cmd->add_option("-n,--order", gen.order, "Order (odd, 3..63)")->required();
    gen_cmd->add_option("-d", gen.d, "Pairing vector of n-1 bits with d_i != d_(n-i)")->required();
    gen_cmd->add_option("--rule", gen.rule, "theorem1 (default) or pcr4");
    gen_cmd->add_option("--start", gen.start, "Initial state (n bits, default 0^n)");
    gen_cmd->add_option("--count", gen.count, "Bits to emit (default 2^n)");
    gen_cmd->add_option("--format", gen.format, detail::kFormatHelp);
    gen_cmd->add_option("--phase", gen.phase,
                        "none (default: start-state phase) or exact-cr (one period, least exact-CR rotation)");

    detail::InputArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Check de Bruijn and CR properties of a cyclic sequence");
    ver_cmd->add_option("file", ver.file, "Input file (default stdin)");
    ver_cmd->add_option("-n,--order", ver.order, "Order (default log2 of the period)");
    ver_cmd->add_option("--format", ver.format, detail::kFormatHelp);
    ver_cmd->add_option("--length", ver.length, "Truncate decoded input to this many bits");

    detail::InputArgs lc;
    auto* lc_cmd = app.add_subcommand("lc", "Linear complexity and subparity (power-of-2 period)");
    lc_cmd->add_option("file", lc.file, "Input file (default stdin)");
    lc_cmd->add_option("--format", lc.format, detail::kFormatHelp);
    lc_cmd->add_option("--length", lc.length, "Truncate decoded input to this many bits");

    detail::EnumArgs en;
    auto* en_cmd = app.add_subcommand("enum", "Enumerate de Bruijn classes of small order (cap: CRSEQ_ENUM_CAP)");
    en_cmd->add_option("-n,--order", en.order, "Order")->required();
    en_cmd->add_flag("--cr-only", en.cr_only, "List CR classes only");
    en_cmd->add_flag("--gamma", en.gamma, "Print the linear complexity census instead of a listing");

    unsigned graph_order = 0;
    std::string side = "t0";
    auto* gr_cmd = app.add_subcommand("graph", "DOT spanning tree of one weight side");
    gr_cmd->add_option("-n,--order", graph_order, "Order (odd, 3..15)")->required();
    gr_cmd->add_option("--side", side, "t0 (default) or t1");

    detail::InputArgs ops;
    std::string op;
    auto* ops_cmd = app.add_subcommand("ops", "Apply r, c, cr, z, u, d, uz, or list the g1 orbit");
    ops_cmd->add_option("file", ops.file, "Input file (default stdin)");
    ops_cmd->add_option("--op", op, "z | u | d | uz | r | c | cr | g1")->required();
    ops_cmd->add_option("-n,--order", ops.order, "Order (default log2 of the period)");
    ops_cmd->add_option("--format", ops.format, detail::kFormatHelp);
    ops_cmd->add_option("--length", ops.length, "Truncate decoded input to this many bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return detail::cmd_gen(gen, out);
        if (*ver_cmd) return detail::cmd_verify(ver, in, out);
        if (*lc_cmd) return detail::cmd_lc(lc, in, out);
        if (*en_cmd) return detail::cmd_enum(en, out);
        if (*gr_cmd) return detail::cmd_graph(graph_order, side, out);
        if (*ops_cmd) return detail::cmd_ops(ops, op, in, out);
    } catch (const UsageError& e) {
        err << "crseq: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "crseq: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "crseq: internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
}  // namespace crseq::cli

#endif
