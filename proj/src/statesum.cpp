#include "qmoy/statesum.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace qmoy {

namespace {

std::mutex g_cache_mu;
std::map<std::vector<int>, LinkPoly> g_chain_sym;               // rho -> E(a/q,-1,q)
std::map<std::pair<std::vector<int>, long>, LinkPoly> g_chain_asym;  // (rho,b) -> E(aq,-b-1,1/q)
std::map<std::vector<int>, std::map<int, LinkPoly>> g_chain_asym_b;  // rho -> b-poly
std::map<std::vector<int>, LinkPoly> g_graph_sym[2];            // [pruned] key -> [D]

LinkPoly chain_sym_eval(const std::vector<int>& rho) {
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_chain_sym.find(rho);
    if (it != g_chain_sym.end()) return it->second;
  }
  LinkPoly v = ehrhart_chain(rho).evaluate(2, -2, -1, false);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_chain_sym.emplace(rho, std::move(v)).first->second;
}

LinkPoly chain_asym_eval(const std::vector<int>& rho, long b) {
  const auto key = std::make_pair(rho, b);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_chain_asym.find(key);
    if (it != g_chain_asym.end()) return it->second;
  }
  LinkPoly v = ehrhart_chain(rho).evaluate(2, 2, -b - 1, true);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_chain_asym.emplace(key, std::move(v)).first->second;
}

std::map<int, LinkPoly> chain_asym_bpoly(const std::vector<int>& rho) {
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_chain_asym_b.find(rho);
    if (it != g_chain_asym_b.end()) return it->second;
  }
  std::map<int, LinkPoly> v = ehrhart_chain(rho).evaluate_b_poly(2, 2, -1, -1, true);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_chain_asym_b.emplace(rho, std::move(v)).first->second;
}

struct SeqKey {
  std::vector<int> rho;
  int w_x4;
  bool operator<(const SeqKey& o) const {
    if (w_x4 != o.w_x4) return w_x4 < o.w_x4;
    return rho < o.rho;
  }
};

// Aggregated sequence census: identical (rho, weight) terms are counted
// rather than rebuilt.
std::map<SeqKey, long> sequence_census(const ResolvedGraph& rg, bool pruned) {
  std::map<SeqKey, long> counts;
  enumerate_sequences(rg, pruned, [&](const FlowSequence& s) {
    std::vector<int> rho;
    rho.reserve(s.flow_ids.size());
    for (int f : s.flow_ids) rho.push_back(rg.flows[static_cast<size_t>(f)].rot_sum);
    ++counts[SeqKey{std::move(rho), s.weight_x4}];
  });
  return counts;
}

}  // namespace

void enumerate_sequences(const ResolvedGraph& rg, bool pruned,
                         const std::function<void(const FlowSequence&)>& emit) {
  const size_t nf = rg.flows.size();
  std::vector<int> remaining = rg.gamma;
  long mass = 0;
  for (int gme : remaining) mass += gme;
  std::vector<char> usable(nf, 1);
  if (pruned) {
    for (size_t f = 0; f < nf; ++f)
      if (rg.flows[f].components.size() > 1) usable[f] = 0;
  }
  FlowSequence seq;
  std::vector<int> wrow;  // running pairings with flows already in seq

  std::function<void(long)> rec = [&](long left) {
    if (left == 0) {
      emit(seq);
      return;
    }
    for (size_t f = 0; f < nf; ++f) {
      if (!usable[f]) continue;
      const EdgeSet& sup = rg.flows[f].support;
      bool fits = true;
      long used = 0;
      for (size_t e = sup._Find_first(); e < kMaxEdges; e = sup._Find_next(e)) {
        if (remaining[e] < 1) {
          fits = false;
          break;
        }
        ++used;
      }
      if (!fits) continue;
      for (size_t e = sup._Find_first(); e < kMaxEdges; e = sup._Find_next(e)) --remaining[e];
      int wadd = 0;
      for (int g : seq.flow_ids) wadd += rg.pair_x4[static_cast<size_t>(g)][f];
      seq.flow_ids.push_back(static_cast<int>(f));
      seq.weight_x4 += wadd;
      seq.rot_sum += rg.flows[f].rot_sum;
      rec(left - used);
      seq.rot_sum -= rg.flows[f].rot_sum;
      seq.weight_x4 -= wadd;
      seq.flow_ids.pop_back();
      for (size_t e = sup._Find_first(); e < kMaxEdges; e = sup._Find_next(e)) ++remaining[e];
    }
  };
  rec(mass);
}

std::vector<FlowSequence> collect_sequences(const ResolvedGraph& rg, bool pruned) {
  std::vector<FlowSequence> out;
  enumerate_sequences(rg, pruned, [&](const FlowSequence& s) { out.push_back(s); });
  return out;
}

LinkPoly symmetric_eval(const ResolvedGraph& rg, bool pruned) {
  LinkPoly acc;
  for (const auto& [key, count] : sequence_census(rg, pruned)) {
    if (key.w_x4 % 2 != 0) throw compute_error("quarter q-power in state weight");
    int rot_sum = 0;
    for (int r : key.rho) rot_sum += r;
    const int len = static_cast<int>(key.rho.size());
    const Rat sign = (len % 2 == 0) ? Rat(count) : Rat(-count);
    // (q/a)^(rot/2) * q^(-w)
    const LinkPoly mono = LinkPoly::monomial(sign, -rot_sum, rot_sum - key.w_x4 / 2);
    acc += mono * chain_sym_eval(key.rho);
  }
  return acc;
}

LinkPoly antisymmetric_eval(const ResolvedGraph& rg, long b) {
  LinkPoly acc;
  for (const auto& [key, count] : sequence_census(rg, false)) {
    if (key.w_x4 % 2 != 0) throw compute_error("quarter q-power in state weight");
    int rot_sum = 0;
    for (int r : key.rho) rot_sum += r;
    const int len = static_cast<int>(key.rho.size());
    const Rat sign = (len % 2 == 0) ? Rat(count) : Rat(-count);
    // (qa)^(-rot/2) * q^(+w)
    const LinkPoly mono = LinkPoly::monomial(sign, -rot_sum, -rot_sum + key.w_x4 / 2);
    acc += mono * chain_asym_eval(key.rho, b);
  }
  return acc;
}

LinkPoly antisymmetric_eval_checked(const ResolvedGraph& rg) {
  std::map<int, LinkPoly> by_bdeg;
  for (const auto& [key, count] : sequence_census(rg, false)) {
    if (key.w_x4 % 2 != 0) throw compute_error("quarter q-power in state weight");
    int rot_sum = 0;
    for (int r : key.rho) rot_sum += r;
    const int len = static_cast<int>(key.rho.size());
    const Rat sign = (len % 2 == 0) ? Rat(count) : Rat(-count);
    const LinkPoly mono = LinkPoly::monomial(sign, -rot_sum, -rot_sum + key.w_x4 / 2);
    for (const auto& [deg, val] : chain_asym_bpoly(key.rho)) by_bdeg[deg] += mono * val;
  }
  for (const auto& [deg, val] : by_bdeg) {
    if (deg > 0 && !val.is_zero()) throw compute_error("b-dependence detected");
  }
  auto it = by_bdeg.find(0);
  return it == by_bdeg.end() ? LinkPoly() : it->second;
}

namespace {

// Decompose a {0,1}-flow support into its cycles (vertex-disjoint by the
// trivalent structure) and return the per-cycle rotations.
std::vector<int> support_rotations(const MOYGraph& g, const EdgeSet& sup) {
  std::vector<int> rots;
  EdgeSet seen;
  for (size_t e0 = sup._Find_first(); e0 < kMaxEdges; e0 = sup._Find_next(e0)) {
    if (seen[e0]) continue;
    std::vector<int> cyc;
    size_t e = e0;
    for (;;) {
      seen.set(e);
      cyc.push_back(static_cast<int>(e));
      const int v = g.edges[e].to;
      int next = -1;
      for (int cand : g.out_edges[static_cast<size_t>(v)]) {
        if (sup[static_cast<size_t>(cand)]) {
          if (next >= 0) throw compute_error("flow is not a disjoint union of cycles");
          next = cand;
        }
      }
      if (next < 0) throw compute_error("flow traversal is not closed");
      if (static_cast<size_t>(next) == e0) break;
      e = static_cast<size_t>(next);
    }
    std::vector<Point> poly;
    for (int ce : cyc) {
      const auto& pl = g.edges[static_cast<size_t>(ce)].poly;
      for (size_t i = 0; i + 1 < pl.size(); ++i) poly.push_back(pl[i]);
    }
    rots.push_back(polygon_turning(poly));
  }
  return rots;
}

int popcount_mask(unsigned m) { return __builtin_popcount(m); }

}  // namespace

LaurentX moy_bruteforce(const ResolvedGraph& rg, int N) {
  if (N < 1) throw compute_error("moy_bruteforce needs N >= 1");
  const MOYGraph& g = rg.g;
  const int ne = g.num_edges();
  for (int e = 0; e < ne; ++e)
    if (g.edges[static_cast<size_t>(e)].gamma > N) return LaurentX();  // no admissible states

  // Precompute subsets of {0..N-1} by size.
  std::vector<std::vector<unsigned>> by_size(static_cast<size_t>(N) + 1);
  for (unsigned m = 0; m < (1u << N); ++m)
    by_size[static_cast<size_t>(popcount_mask(m))].push_back(m);

  std::vector<unsigned> assign(static_cast<size_t>(ne), 0);
  std::vector<bool> assigned(static_cast<size_t>(ne), false);
  LaurentX total;

  // Value of color slot p (0-based) doubled: 2*sigma = 2p - (N-1).
  const auto value2 = [&](int p) { return 2 * p - (N - 1); };

  const auto vertex_ok = [&](int v) {
    // Check the union condition at v once all incident edges are assigned.
    unsigned in_u = 0, out_u = 0;
    long in_c = 0, out_c = 0;
    for (int e : g.in_edges[static_cast<size_t>(v)]) {
      if (!assigned[static_cast<size_t>(e)]) return true;
      in_u |= assign[static_cast<size_t>(e)];
      in_c += popcount_mask(assign[static_cast<size_t>(e)]);
    }
    for (int e : g.out_edges[static_cast<size_t>(v)]) {
      if (!assigned[static_cast<size_t>(e)]) return true;
      out_u |= assign[static_cast<size_t>(e)];
      out_c += popcount_mask(assign[static_cast<size_t>(e)]);
    }
    // Disjointness inside each side is equivalent to the popcount matching.
    return in_u == out_u && in_c == popcount_mask(in_u) && out_c == popcount_mask(out_u);
  };

  const auto state_value = [&]() {
    long exp4 = 0;
    // Vertex weights.
    for (int v = 0; v < g.num_nodes(); ++v) {
      const int le = g.left_edge[static_cast<size_t>(v)];
      if (le < 0) continue;
      const int re = g.right_edge[static_cast<size_t>(v)];
      const unsigned ml = assign[static_cast<size_t>(le)], mr = assign[static_cast<size_t>(re)];
      for (int p = 0; p < N; ++p) {
        if (!(ml >> p & 1u)) continue;
        for (int s = 0; s < N; ++s) {
          if (!(mr >> s & 1u)) continue;
          if (p < s) ++exp4;
          if (p > s) --exp4;
        }
      }
    }
    // Rotation statistic: per color, the colored edges form disjoint cycles.
    for (int p = 0; p < N; ++p) {
      EdgeSet sup;
      for (int e = 0; e < ne; ++e)
        if (assign[static_cast<size_t>(e)] >> p & 1u) sup.set(static_cast<size_t>(e));
      if (sup.none()) continue;
      for (int rot : support_rotations(g, sup)) exp4 += 2L * value2(p) * rot;
    }
    if (exp4 % 2 != 0) throw compute_error("quarter q-power in MOY state");
    total += LaurentX::monomial(Rat(1), static_cast<int>(exp4 / 2));
  };

  std::function<void()> rec = [&]() {
    // Forced assignment: a vertex with exactly one open incident edge.
    for (int v = 0; v < g.num_nodes(); ++v) {
      int open = -1;
      int open_count = 0;
      unsigned in_u = 0, out_u = 0;
      bool open_is_in = false;
      for (int e : g.in_edges[static_cast<size_t>(v)]) {
        if (!assigned[static_cast<size_t>(e)]) {
          open = e;
          ++open_count;
          open_is_in = true;
        } else {
          in_u |= assign[static_cast<size_t>(e)];
        }
      }
      for (int e : g.out_edges[static_cast<size_t>(v)]) {
        if (!assigned[static_cast<size_t>(e)]) {
          open = e;
          ++open_count;
          open_is_in = false;
        } else {
          out_u |= assign[static_cast<size_t>(e)];
        }
      }
      if (open_count != 1) continue;
      const unsigned forced = open_is_in ? (out_u & ~in_u) : (in_u & ~out_u);
      if (popcount_mask(forced) != g.edges[static_cast<size_t>(open)].gamma) return;
      assign[static_cast<size_t>(open)] = forced;
      assigned[static_cast<size_t>(open)] = true;
      bool ok = vertex_ok(g.edges[static_cast<size_t>(open)].from) &&
                vertex_ok(g.edges[static_cast<size_t>(open)].to);
      if (ok) rec();
      assigned[static_cast<size_t>(open)] = false;
      return;
    }
    // Branch on the first unassigned edge.
    int pick = -1;
    for (int e = 0; e < ne; ++e)
      if (!assigned[static_cast<size_t>(e)]) {
        pick = e;
        break;
      }
    if (pick < 0) {
      state_value();
      return;
    }
    for (unsigned m : by_size[static_cast<size_t>(g.edges[static_cast<size_t>(pick)].gamma)]) {
      assign[static_cast<size_t>(pick)] = m;
      assigned[static_cast<size_t>(pick)] = true;
      if (vertex_ok(g.edges[static_cast<size_t>(pick)].from) &&
          vertex_ok(g.edges[static_cast<size_t>(pick)].to))
        rec();
      assigned[static_cast<size_t>(pick)] = false;
    }
  };
  rec();
  return total;
}

long resolution_count(const BraidWord& b, int r) {
  long count = 1;
  for (size_t t = 0; t < b.letters.size(); ++t) {
    if (count > (1L << 40)) return -1;
    count *= (r + 1);
  }
  return count;
}

namespace {

// Canonical cache key of a resolved diagram: the lexicographically minimal
// cyclic rotation of the per-letter records (annular isotopy slides letters
// around the closure).
std::vector<int> canonical_key(const BraidWord& b, const std::vector<int>& width, int r) {
  const size_t L = b.letters.size();
  std::vector<int> flat;
  const auto encode_from = [&](size_t s) {
    std::vector<int> v;
    v.reserve(3 * L + 2);
    for (size_t t = 0; t < L; ++t) {
      const int l = b.letters[(s + t) % L];
      v.push_back(std::abs(l));
      v.push_back(l > 0 ? 1 : -1);
      v.push_back(width[(s + t) % L]);
    }
    v.push_back(b.strands);
    v.push_back(r);
    return v;
  };
  flat = encode_from(0);
  for (size_t s = 1; s < L; ++s) flat = std::min(flat, encode_from(s));
  return flat;
}

struct HomflyParts {
  std::map<std::vector<int>, LaurentX> coeff;                 // key -> summed coefficient
  std::map<std::vector<int>, std::vector<int>> representative;  // key -> one i-vector
};

HomflyParts gather_resolutions(const BraidWord& b, int r, const EvalOptions& opt, bool antisym) {
  if (r < 1) throw compute_error("color must be >= 1");
  b.validate();
  const long count = resolution_count(b, r);
  if (count < 0 || count > opt.max_resolutions)
    throw compute_error("resolution count (r+1)^c exceeds the size guard of " +
                        std::to_string(opt.max_resolutions) +
                        " (set HOMFLY_MAX_RESOLUTIONS to override)");
  const size_t L = b.letters.size();
  HomflyParts parts;
  std::vector<int> iv(L, 0);
  for (;;) {
    int sum_i = 0, sum_sig = 0;
    std::vector<int> width(L);
    for (size_t t = 0; t < L; ++t) {
      sum_i += iv[t];
      sum_sig += (b.letters[t] > 0 ? 1 : -1) * iv[t];
      width[t] = r - iv[t];
    }
    const Rat sign = (sum_i % 2 == 0) ? Rat(1) : Rat(-1);
    const int xexp = antisym ? sum_sig : -sum_sig;  // q^{+-sigma(c) i_c / 2}
    auto key = canonical_key(b, width, r);
    auto it = parts.coeff.find(key);
    if (it == parts.coeff.end()) {
      parts.coeff[key] = LaurentX::monomial(sign, xexp);
      parts.representative[key] = iv;
    } else {
      it->second += LaurentX::monomial(sign, xexp);
    }
    // Odometer.
    size_t t = 0;
    while (t < L && iv[t] == r) {
      iv[t] = 0;
      ++t;
    }
    if (t == L) break;
    ++iv[t];
  }
  return parts;
}

}  // namespace

LinkPoly colored_homfly(const BraidWord& b, int r, const EvalOptions& opt) {
  auto parts = gather_resolutions(b, r, opt, /*antisym=*/false);
  const int cache_slot = opt.pruned ? 1 : 0;

  // Evaluate distinct graphs, reusing the global memo.
  std::vector<const std::vector<int>*> todo;
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    for (const auto& [key, coeff] : parts.coeff)
      if (!g_graph_sym[cache_slot].count(key)) todo.push_back(&key);
  }
  const auto eval_one = [&](const std::vector<int>& key) {
    ResolutionIndex idx;
    idx.r = r;
    idx.i = parts.representative.at(key);
    ResolvedGraph rg = resolve_full(b, idx);
    LinkPoly val = symmetric_eval(rg, opt.pruned);
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_graph_sym[cache_slot].emplace(key, std::move(val));
  };
  int nthreads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (nthreads > 1 && todo.size() > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int use = std::min<size_t>(static_cast<size_t>(nthreads), todo.size());
    for (int w = 0; w < use; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          const size_t k = next.fetch_add(1);
          if (k >= todo.size()) return;
          eval_one(*todo[k]);
        }
      });
    for (auto& th : pool) th.join();
  } else {
    for (const auto* key : todo) eval_one(*key);
  }

  LinkPoly total;
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    for (const auto& [key, coeff] : parts.coeff)
      total += g_graph_sym[cache_slot].at(key).scaled(RatFuncX(coeff));
  }
  // ((-a^{-1/2})^r q^{-r(r-1)/2})^{c_+ - c_-}; the per-crossing sign is
  // (-1)^r, which Markov invariance forces (and the closed 2-braid formula
  // confirms at even colors).
  const int e = b.writhe();
  const Rat sgn = ((r * e) % 2 == 0) ? Rat(1) : Rat(-1);
  return total * LinkPoly::monomial(sgn, -r * e, -r * (r - 1) * e);
}

LinkPoly antisym_homfly(const BraidWord& b, int r, const EvalOptions& opt) {
  auto parts = gather_resolutions(b, r, opt, /*antisym=*/true);
  LinkPoly total;
  for (const auto& [key, coeff] : parts.coeff) {
    ResolutionIndex idx;
    idx.r = r;
    idx.i = parts.representative.at(key);
    ResolvedGraph rg = resolve_full(b, idx);
    total += antisymmetric_eval_checked(rg).scaled(RatFuncX(coeff));
  }
  const int e = b.writhe();
  const Rat sgn = ((r * e) % 2 == 0) ? Rat(1) : Rat(-1);
  return total * LinkPoly::monomial(sgn, -r * e, r * (r - 1) * e);
}

}  // namespace qmoy
