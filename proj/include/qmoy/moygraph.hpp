#pragma once

#include <bitset>
#include <string>
#include <vector>

#include "qmoy/braid.hpp"

namespace qmoy {

constexpr size_t kMaxEdges = 256;
using EdgeSet = std::bitset<kMaxEdges>;

struct Point {
  long x = 0;
  long y = 0;
};

struct GraphEdge {
  int from = -1;
  int to = -1;
  int gamma = 0;
  std::vector<Point> poly;  // embedding polyline including both endpoints
};

// Planar layered MOY graph of a resolved braid closure.  Trivalent vertices
// carry a left/right designation of their two non-trunk edges, read off the
// embedding.
class MOYGraph {
 public:
  std::vector<Point> node_pos;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> out_edges, in_edges;
  // Per node, -1 unless trivalent.
  std::vector<int> left_edge, right_edge;

  int add_node(Point p);
  int add_edge(int from, int to, int gamma, std::vector<Point> poly);
  // Builds adjacency, assigns left/right pairs, verifies flow conservation
  // and absence of sources/sinks.
  void finalize();

  int num_nodes() const { return static_cast<int>(node_pos.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  bool is_trivalent(int node) const { return left_edge[static_cast<size_t>(node)] >= 0; }

  std::string json_dump() const;
};

// Nonzero {0,1}-circulation, stored with its decomposition into embedded
// closed curves and their rotation numbers.
struct ElementaryFlow {
  EdgeSet support;
  std::vector<std::vector<int>> components;  // edge cycles
  std::vector<int> comp_rot;                 // +-1 per component
  int rot_sum = 0;
};

// Resolution index per Thm-style crossing expansion: i_c in {0..r}, where
// the transfer rung of crossing c carries r - i_c units, so i_c = r is the
// oriented (Seifert) smoothing.
struct ResolutionIndex {
  int r = 1;
  std::vector<int> i;
  void validate(size_t crossings) const;
};

struct ResolvedGraph {
  MOYGraph g;
  std::vector<int> gamma;  // copy of edge gammas for quick access
  std::vector<ElementaryFlow> flows;
  // 4 * <f_i, f_j>, antisymmetric.
  std::vector<std::vector<int>> pair_x4;
};

MOYGraph resolve(const BraidWord& b, const ResolutionIndex& idx);

std::vector<ElementaryFlow> elementary_flows(const MOYGraph& g);

// 4 * <d, e>: counts trivalent vertices where d takes the left edge and e
// the right edge, minus the transposed count.
int intersection_x4(const ElementaryFlow& d, const ElementaryFlow& e, const MOYGraph& g);

// Signed rotation of a closed polyline; +-1 for the embedded curves that
// arise here.
int polygon_turning(const std::vector<Point>& poly);

ResolvedGraph resolve_full(const BraidWord& b, const ResolutionIndex& idx);

}  // namespace qmoy
