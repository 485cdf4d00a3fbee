#include "qmoy/moygraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qmoy {

int MOYGraph::add_node(Point p) {
  node_pos.push_back(p);
  return static_cast<int>(node_pos.size()) - 1;
}

int MOYGraph::add_edge(int from, int to, int gamma, std::vector<Point> poly) {
  GraphEdge e{from, to, gamma, std::move(poly)};
  edges.push_back(std::move(e));
  if (edges.size() > kMaxEdges) throw compute_error("graph exceeds edge capacity");
  return static_cast<int>(edges.size()) - 1;
}

namespace {

// Direction of the first (out) or last (in) polyline segment at a node.
Point out_dir(const GraphEdge& e) {
  return {e.poly[1].x - e.poly[0].x, e.poly[1].y - e.poly[0].y};
}

Point in_dir(const GraphEdge& e) {
  const size_t n = e.poly.size();
  return {e.poly[n - 1].x - e.poly[n - 2].x, e.poly[n - 1].y - e.poly[n - 2].y};
}

long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

}  // namespace

void MOYGraph::finalize() {
  const size_t nn = node_pos.size();
  out_edges.assign(nn, {});
  in_edges.assign(nn, {});
  for (int i = 0; i < num_edges(); ++i) {
    out_edges[static_cast<size_t>(edges[static_cast<size_t>(i)].from)].push_back(i);
    in_edges[static_cast<size_t>(edges[static_cast<size_t>(i)].to)].push_back(i);
  }
  left_edge.assign(nn, -1);
  right_edge.assign(nn, -1);
  for (size_t v = 0; v < nn; ++v) {
    const auto& ins = in_edges[v];
    const auto& outs = out_edges[v];
    if (ins.empty() || outs.empty()) throw compute_error("graph has a source or sink");
    long gin = 0, gout = 0;
    for (int e : ins) gin += edges[static_cast<size_t>(e)].gamma;
    for (int e : outs) gout += edges[static_cast<size_t>(e)].gamma;
    if (gin != gout) throw compute_error("flow conservation violated at a vertex");
    if (ins.size() + outs.size() == 2) continue;  // bend node
    if (ins.size() + outs.size() != 3) throw compute_error("vertex is not trivalent");
    // Split: classify the two out edges against the incoming direction.
    // Merge: classify the two in edges (by where they come from) against the
    // outgoing trunk direction.
    int a, bz;
    long ca, cb;
    if (outs.size() == 2) {
      const Point d = in_dir(edges[static_cast<size_t>(ins[0])]);
      a = outs[0];
      bz = outs[1];
      ca = cross(d, out_dir(edges[static_cast<size_t>(a)]));
      cb = cross(d, out_dir(edges[static_cast<size_t>(bz)]));
    } else {
      const Point d = out_dir(edges[static_cast<size_t>(outs[0])]);
      a = ins[0];
      bz = ins[1];
      const Point da = in_dir(edges[static_cast<size_t>(a)]);
      const Point db = in_dir(edges[static_cast<size_t>(bz)]);
      ca = cross(d, Point{-da.x, -da.y});
      cb = cross(d, Point{-db.x, -db.y});
    }
    int lv, rv;
    if (ca > 0 || cb < 0) {
      lv = a;
      rv = bz;
    } else if (cb > 0 || ca < 0) {
      lv = bz;
      rv = a;
    } else {
      throw compute_error("ambiguous left/right geometry at a vertex");
    }
    // Both classified to the same side means the embedding is broken.
    if ((ca > 0 && cb > 0) || (ca < 0 && cb < 0))
      throw compute_error("ambiguous left/right geometry at a vertex");
    left_edge[v] = lv;
    right_edge[v] = rv;
  }
}

std::string MOYGraph::json_dump() const {
  std::ostringstream os;
  os << "{\"nodes\": [";
  for (int v = 0; v < num_nodes(); ++v) {
    if (v) os << ", ";
    os << "{\"id\": " << v << ", \"x\": " << node_pos[static_cast<size_t>(v)].x
       << ", \"y\": " << node_pos[static_cast<size_t>(v)].y << "}";
  }
  os << "], \"edges\": [";
  for (int i = 0; i < num_edges(); ++i) {
    const auto& e = edges[static_cast<size_t>(i)];
    if (i) os << ", ";
    os << "{\"from\": " << e.from << ", \"to\": " << e.to << ", \"gamma\": " << e.gamma
       << ", \"embedding\": [";
    for (size_t k = 0; k < e.poly.size(); ++k) {
      if (k) os << ", ";
      os << "[" << e.poly[k].x << ", " << e.poly[k].y << "]";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

void ResolutionIndex::validate(size_t crossings) const {
  if (r < 1) throw compute_error("color must be >= 1");
  if (i.size() != crossings) throw compute_error("resolution index size mismatch");
  for (int ic : i)
    if (ic < 0 || ic > r) throw compute_error("resolution index out of range");
}

MOYGraph resolve(const BraidWord& b, const ResolutionIndex& idx) {
  b.validate();
  idx.validate(b.letters.size());
  const int n = b.strands;
  const int r = idx.r;
  MOYGraph g;

  const auto X = [](int col) { return 8L * col; };  // columns are 1-based
  const long Ytop = 8L * (static_cast<long>(b.letters.size()) + 1);

  std::vector<int> bottom(static_cast<size_t>(n) + 1), top(static_cast<size_t>(n) + 1);
  std::vector<int> cur(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    bottom[static_cast<size_t>(k)] = g.add_node({X(k), 0});
    cur[static_cast<size_t>(k)] = bottom[static_cast<size_t>(k)];
  }

  const auto vseg = [&](int from_node, int to_node) {
    g.add_edge(from_node, to_node, r,
               {g.node_pos[static_cast<size_t>(from_node)], g.node_pos[static_cast<size_t>(to_node)]});
  };

  for (size_t t = 0; t < b.letters.size(); ++t) {
    const int letter = b.letters[t];
    const int k = std::abs(letter);
    const int w = r - idx.i[t];  // rung width; w = 0 is the Seifert smoothing
    if (w == 0) continue;
    const long y0 = 8L * (static_cast<long>(t) + 1) + 2;
    const long y1 = y0 + 4;
    const long xl = X(k), xr = X(k + 1);
    const int bL = g.add_node({xl, y0});
    const int bR = g.add_node({xr, y0});
    const int tL = g.add_node({xl, y1});
    const int tR = g.add_node({xr, y1});
    vseg(cur[static_cast<size_t>(k)], bL);
    vseg(cur[static_cast<size_t>(k + 1)], bR);
    if (letter > 0) {
      // Positive crossing: transfer right along the bottom rung, return along
      // the top rung; the right middle edge carries r + w.
      g.add_edge(bL, tL, r - w, {{xl, y0}, {xl, y1}});
      g.add_edge(bR, tR, r + w, {{xr, y0}, {xr, y1}});
      g.add_edge(bL, bR, w, {{xl, y0}, {xr, y0}});
      g.add_edge(tR, tL, w, {{xr, y1}, {xl, y1}});
    } else {
      g.add_edge(bL, tL, r + w, {{xl, y0}, {xl, y1}});
      g.add_edge(bR, tR, r - w, {{xr, y0}, {xr, y1}});
      g.add_edge(bR, bL, w, {{xr, y0}, {xl, y0}});
      g.add_edge(tL, tR, w, {{xl, y1}, {xr, y1}});
    }
    cur[static_cast<size_t>(k)] = tL;
    cur[static_cast<size_t>(k + 1)] = tR;
  }

  for (int k = 1; k <= n; ++k) {
    top[static_cast<size_t>(k)] = g.add_node({X(k), Ytop});
    vseg(cur[static_cast<size_t>(k)], top[static_cast<size_t>(k)]);
    // Closure arc around the left side, nested by column index.
    const long xk = X(k);
    const long hy = Ytop + 4L * k;
    const long wx = -8L * k;
    const long by = -4L * k;
    g.add_edge(top[static_cast<size_t>(k)], bottom[static_cast<size_t>(k)], r,
               {{xk, Ytop}, {xk, hy}, {wx, hy}, {wx, by}, {xk, by}, {xk, 0}});
  }

  g.finalize();
  return g;
}

int polygon_turning(const std::vector<Point>& poly) {
  long long area2 = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    area2 += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
  }
  if (area2 == 0) throw compute_error("degenerate flow component");
  return area2 > 0 ? 1 : -1;
}

namespace {

// All simple cycles of the gamma-positive subgraph; each cycle is recorded
// with its smallest edge first.
std::vector<std::vector<int>> simple_cycles(const MOYGraph& g) {
  std::vector<std::vector<int>> cycles;
  const int ne = g.num_edges();
  std::vector<bool> node_used(static_cast<size_t>(g.num_nodes()), false);
  std::vector<int> path;
  std::function<void(int, int, int)> dfs = [&](int e0, int node, int start_node) {
    if (node == start_node) {
      cycles.push_back(path);
      return;
    }
    if (node_used[static_cast<size_t>(node)]) return;
    node_used[static_cast<size_t>(node)] = true;
    for (int e : g.out_edges[static_cast<size_t>(node)]) {
      if (e <= e0 || g.edges[static_cast<size_t>(e)].gamma < 1) continue;
      path.push_back(e);
      dfs(e0, g.edges[static_cast<size_t>(e)].to, start_node);
      path.pop_back();
    }
    node_used[static_cast<size_t>(node)] = false;
  };
  for (int e0 = 0; e0 < ne; ++e0) {
    if (g.edges[static_cast<size_t>(e0)].gamma < 1) continue;
    path = {e0};
    dfs(e0, g.edges[static_cast<size_t>(e0)].to, g.edges[static_cast<size_t>(e0)].from);
  }
  return cycles;
}

std::vector<Point> cycle_polygon(const MOYGraph& g, const std::vector<int>& cyc) {
  std::vector<Point> poly;
  for (int e : cyc) {
    const auto& pl = g.edges[static_cast<size_t>(e)].poly;
    for (size_t i = 0; i + 1 < pl.size(); ++i) poly.push_back(pl[i]);
  }
  return poly;
}

bool support_less(const EdgeSet& a, const EdgeSet& b) {
  for (size_t i = 0; i < kMaxEdges; ++i) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

}  // namespace

std::vector<ElementaryFlow> elementary_flows(const MOYGraph& g) {
  const auto cycles = simple_cycles(g);
  const size_t nc = cycles.size();
  std::vector<EdgeSet> cyc_nodes_mask;  // node sets as bitsets for disjointness
  std::vector<EdgeSet> cyc_edges;
  cyc_nodes_mask.reserve(nc);
  cyc_edges.reserve(nc);
  if (static_cast<size_t>(g.num_nodes()) > kMaxEdges)
    throw compute_error("graph exceeds node capacity");
  for (const auto& c : cycles) {
    EdgeSet es, ns;
    for (int e : c) {
      es.set(static_cast<size_t>(e));
      ns.set(static_cast<size_t>(g.edges[static_cast<size_t>(e)].from));
      ns.set(static_cast<size_t>(g.edges[static_cast<size_t>(e)].to));
    }
    cyc_edges.push_back(es);
    cyc_nodes_mask.push_back(ns);
  }
  std::vector<int> rot(nc);
  for (size_t i = 0; i < nc; ++i) rot[i] = polygon_turning(cycle_polygon(g, cycles[i]));

  std::vector<ElementaryFlow> flows;
  std::vector<size_t> chosen;
  std::function<void(size_t, EdgeSet)> rec = [&](size_t start, EdgeSet nodes) {
    if (!chosen.empty()) {
      ElementaryFlow f;
      for (size_t ci : chosen) {
        f.support |= cyc_edges[ci];
        f.components.push_back(cycles[ci]);
        f.comp_rot.push_back(rot[ci]);
        f.rot_sum += rot[ci];
      }
      flows.push_back(std::move(f));
    }
    for (size_t ci = start; ci < nc; ++ci) {
      if ((nodes & cyc_nodes_mask[ci]).any()) continue;
      chosen.push_back(ci);
      rec(ci + 1, nodes | cyc_nodes_mask[ci]);
      chosen.pop_back();
    }
  };
  rec(0, EdgeSet());
  std::sort(flows.begin(), flows.end(), [](const ElementaryFlow& a, const ElementaryFlow& b) {
    return support_less(a.support, b.support);
  });
  return flows;
}

int intersection_x4(const ElementaryFlow& d, const ElementaryFlow& e, const MOYGraph& g) {
  int acc = 0;
  for (int v = 0; v < g.num_nodes(); ++v) {
    const int le = g.left_edge[static_cast<size_t>(v)];
    if (le < 0) continue;
    const int re = g.right_edge[static_cast<size_t>(v)];
    const bool dl = d.support[static_cast<size_t>(le)], dr = d.support[static_cast<size_t>(re)];
    const bool el = e.support[static_cast<size_t>(le)], er = e.support[static_cast<size_t>(re)];
    if (dl && er) ++acc;
    if (dr && el) --acc;
  }
  return acc;
}

ResolvedGraph resolve_full(const BraidWord& b, const ResolutionIndex& idx) {
  ResolvedGraph rg;
  rg.g = resolve(b, idx);
  rg.gamma.resize(static_cast<size_t>(rg.g.num_edges()));
  for (int i = 0; i < rg.g.num_edges(); ++i)
    rg.gamma[static_cast<size_t>(i)] = rg.g.edges[static_cast<size_t>(i)].gamma;
  rg.flows = elementary_flows(rg.g);
  const size_t nf = rg.flows.size();
  rg.pair_x4.assign(nf, std::vector<int>(nf, 0));
  for (size_t i = 0; i < nf; ++i)
    for (size_t j = 0; j < nf; ++j) {
      if (i == j) continue;
      rg.pair_x4[i][j] = intersection_x4(rg.flows[i], rg.flows[j], rg.g);
    }
  return rg;
}

}  // namespace qmoy
