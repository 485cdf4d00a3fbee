#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qmoy/ehrhart.hpp"
#include "qmoy/moygraph.hpp"

namespace qmoy {

// Ordered sequence of elementary flows summing edgewise to gamma.
struct FlowSequence {
  std::vector<int> flow_ids;
  int rot_sum = 0;
  int weight_x4 = 0;  // 4 * sum_{i<j} <f_i, f_j>
};

struct EvalOptions {
  long max_resolutions = 65536;
  int threads = 0;  // 0 = hardware concurrency
  bool pruned = false;  // drop sequences containing multi-component flows
};

// Streams every ordered sequence (repetition allowed) whose edgewise sum is
// the graph's flow; deterministic order.
void enumerate_sequences(const ResolvedGraph& rg, bool pruned,
                         const std::function<void(const FlowSequence&)>& emit);
std::vector<FlowSequence> collect_sequences(const ResolvedGraph& rg, bool pruned = false);

// Symmetric evaluation [Gamma, gamma](a, q).
LinkPoly symmetric_eval(const ResolvedGraph& rg, bool pruned = false);

// Anti-symmetric evaluation <Gamma, gamma>(q, a, b) at an integer value
// of b.
LinkPoly antisymmetric_eval(const ResolvedGraph& rg, long b);

// Anti-symmetric evaluation with b kept symbolic: verifies that every
// positive b-degree cancels and returns the b = 0 value.  Throws
// "b-dependence detected" otherwise.
LinkPoly antisymmetric_eval_checked(const ResolvedGraph& rg);

// Original MOY state sum <Gamma, gamma>_N(q) by direct enumeration.
LaurentX moy_bruteforce(const ResolvedGraph& rg, int N);

// P_r of the braid closure via the symmetric state sum.
LinkPoly colored_homfly(const BraidWord& b, int r, const EvalOptions& opt = {});

// P_{r^t} of the braid closure via the anti-symmetric state sum; equals
// colored_homfly with q -> q^(-1).
LinkPoly antisym_homfly(const BraidWord& b, int r, const EvalOptions& opt = {});

// Number of crossing resolutions (r+1)^c, or -1 on overflow.
long resolution_count(const BraidWord& b, int r);

}  // namespace qmoy
