#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmoy/rat.hpp"

namespace qmoy {

// Signed-generator braid word; letter +k / -k means sigma_k^{+1/-1},
// 1 <= k <= strands-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int c_plus() const;
  int c_minus() const;
  int writhe() const { return c_plus() - c_minus(); }
  BraidWord mirrored() const;
  // Strand permutation of the braid (image of each bottom position).
  std::vector<int> permutation() const;
  int closure_components() const;
  void validate() const;
};

struct DiagramStats {
  int c_plus = 0;
  int c_minus = 0;
  int s_plus = 0;
  int s_minus = 0;
  int writhe = 0;
};

// Accepts whitespace-separated signed integers ("1 -2 1 -2") or a single
// alphabetic token (a=sigma_1, A=sigma_1^{-1}, ...).  The strand count
// defaults to 1 + max generator index.
BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);

// Seifert data of the braid closure: all strand circles are counter
// clockwise under the closure convention used here.
DiagramStats stats(const BraidWord& b);

}  // namespace qmoy
