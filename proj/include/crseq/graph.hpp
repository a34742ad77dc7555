#ifndef CRSEQ_GRAPH_HPP
#define CRSEQ_GRAPH_HPP

#include <ostream>
#include <sstream>
#include <string>

#include "pcr.hpp"

namespace crseq {

/// DOT digraph of the spanning tree over one weight side. Nodes are
/// necklaces (the root is drawn double-circled); each edge is labelled
/// "v/v_hat" with its conjugate pair.
inline void write_spanning_tree_dot(std::ostream& out, unsigned n, Side side) {
    const auto part = partition_by_weight(pcr_cycles(n));
    const auto& cycles = side == Side::t0 ? part.t0 : part.t1;
    const auto edges = spanning_edges(n, side);
    const std::string root = std::string(n, side == Side::t0 ? '0' : '1');

    out << "digraph " << to_string(side) << " {\n";
    out << "  rankdir=BT;\n";
    for (const auto& c : cycles) {
        const auto label = c.to_string();
        out << "  \"" << label << "\" [label=\"" << label << "\" weight=" << weight(c);
        if (label == root) out << " shape=doublecircle";
        out << "];\n";
    }
    for (const auto& e : edges) {
        out << "  \"" << e.from_cycle.to_string() << "\" -> \"" << e.to_cycle.to_string() << "\" [label=\""
            << e.v.to_string() << "/" << e.v_hat.to_string() << "\"];\n";
    }
    out << "}\n";
}

inline std::string spanning_tree_dot(unsigned n, Side side) {
    std::ostringstream os;
    write_spanning_tree_dot(os, n, side);
    return os.str();
}

}  // namespace crseq

#endif
