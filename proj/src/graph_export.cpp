#include <map>
#include <sstream>

#include "misinfo/adaptation.hpp"

namespace misinfo {

std::string export_dot(const AdaptationGraph& graph, const DotOptions& opts) {
  const NormalFormGame& shape = graph.shape();
  std::map<PositionSet, std::size_t> id;
  for (const auto& [x, n] : graph.nodes) id.emplace(x, id.size());

  std::ostringstream os;
  os << "digraph adaptation {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [x, n] : graph.nodes) {
    if (opts.loopless && !n.expanded) continue;
    os << "  n" << id.at(x) << " [label=\"" << x.str(shape, opts.index_base) << "\\n"
       << stable_hash(*n.game) << "\"";
    if (graph.terminal.count(x)) os << ", peripheries=2";
    if (!n.expanded) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : graph.edges) {
    if (opts.loopless && e.loop) continue;
    os << "  n" << id.at(e.from) << " -> n" << id.at(e.to) << " [label=\""
       << shape.position(e.cell).str(opts.index_base) << "\"";
    if (e.loop && e.from != e.to) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace misinfo
