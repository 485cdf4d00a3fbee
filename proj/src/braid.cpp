#include "qmoy/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace qmoy {

int BraidWord::c_plus() const {
  int c = 0;
  for (int l : letters) c += l > 0;
  return c;
}

int BraidWord::c_minus() const {
  int c = 0;
  for (int l : letters) c += l < 0;
  return c;
}

BraidWord BraidWord::mirrored() const {
  BraidWord m = *this;
  for (int& l : m.letters) l = -l;
  return m;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> p(static_cast<size_t>(strands));
  std::iota(p.begin(), p.end(), 0);
  for (int l : letters) {
    const int k = std::abs(l) - 1;
    std::swap(p[static_cast<size_t>(k)], p[static_cast<size_t>(k + 1)]);
  }
  return p;
}

int BraidWord::closure_components() const {
  // Cycles of the inverse permutation; same count either way.
  auto p = permutation();
  std::vector<bool> seen(p.size(), false);
  int comps = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++comps;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(p[j]);
    }
  }
  return comps;
}

void BraidWord::validate() const {
  if (strands < 1) throw parse_error("braid needs at least one strand");
  for (size_t i = 0; i < letters.size(); ++i) {
    const int l = letters[i];
    if (l == 0) throw parse_error("generator index 0 at letter " + std::to_string(i + 1));
    if (std::abs(l) >= strands)
      throw parse_error("generator index " + std::to_string(l) + " out of range at letter " +
                        std::to_string(i + 1) + " (strands = " + std::to_string(strands) + ")");
  }
}

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
  std::vector<int> letters;
  std::istringstream in(text);
  std::string tok;
  size_t pos = 0;
  while (in >> tok) {
    ++pos;
    const bool numeric = tok.find_first_not_of("+-0123456789") == std::string::npos;
    if (numeric) {
      try {
        letters.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw parse_error("unparsable token '" + tok + "' at position " + std::to_string(pos));
      }
    } else {
      for (size_t i = 0; i < tok.size(); ++i) {
        const char c = tok[i];
        if (c >= 'a' && c <= 'y') {
          letters.push_back(c - 'a' + 1);
        } else if (c >= 'A' && c <= 'Y') {
          letters.push_back(-(c - 'A' + 1));
        } else {
          throw parse_error(std::string("unparsable character '") + c + "' at position " +
                            std::to_string(pos) + ":" + std::to_string(i + 1));
        }
      }
    }
  }
  int maxgen = 0;
  for (int l : letters) {
    if (l == 0) throw parse_error("generator index 0 is invalid");
    maxgen = std::max(maxgen, std::abs(l));
  }
  BraidWord b;
  b.strands = strands.value_or(maxgen + 1);
  b.letters = std::move(letters);
  b.validate();
  return b;
}

DiagramStats stats(const BraidWord& b) {
  b.validate();
  DiagramStats s;
  s.c_plus = b.c_plus();
  s.c_minus = b.c_minus();
  s.s_plus = b.strands;
  s.s_minus = 0;
  s.writhe = b.writhe();
  return s;
}

}  // namespace qmoy
