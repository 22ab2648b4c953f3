#pragma once

// Shared graphs and comparison helpers.

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphcx/graph.hpp"
#include "graphcx/state_sum.hpp"
#include "support/oracles.hpp"

namespace fixtures {

/// Two vertices of valence 5 and 3 drawn counterclockwise, letters a..n as
/// half-edges 0..13; seven of the edges leave the picture.
inline graphcx::OrientedGraph two_vertex_fragment() {
  return {graphcx::GraphKind::ribbon,
          {{6, 11, 12, 8, 7}, {13, 10, 9}},
          {{{1, 7}}, {{8, 2}}, {{12, 13}}, {{11, 5}}, {{0, 6}}, {{9, 3}}, {{4, 10}}}};
}

inline const char* two_vertex_product = "d_{glmih} d_{nkj} k^{bh} k^{ic} k^{mn} k^{lf} k^{ag} k^{jd} k^{ek}";

/// Factor strings in order, e.g. "d_{glmih}".
inline std::vector<std::string> split_factors(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Same factors in the same order and slots after an injective renaming of
/// the single-letter indices.
inline bool equal_up_to_renaming(const std::string& a, const std::string& b) {
  const auto fa = split_factors(a), fb = split_factors(b);
  if (fa.size() != fb.size()) return false;
  std::map<char, char> fwd, back;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const auto& x = fa[i];
    const auto& y = fb[i];
    if (x.size() != y.size() || x.substr(0, 3) != y.substr(0, 3) || x.back() != '}' || y.back() != '}') return false;
    for (std::size_t j = 3; j + 1 < x.size(); ++j) {
      auto [it, fresh] = fwd.try_emplace(x[j], y[j]);
      auto [jt, fresh2] = back.try_emplace(y[j], x[j]);
      if (it->second != y[j] || jt->second != x[j]) return false;
    }
  }
  return true;
}

/// Random word with `pairs` upper/lower pairs in random positions.
inline std::string random_pattern(int pairs, std::mt19937& rng) {
  std::vector<std::string> slots;
  for (int i = 0; i < pairs; ++i) {
    const std::string sym(1, static_cast<char>('a' + i));
    slots.push_back("^" + sym);
    slots.push_back("_" + sym);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::string out;
  for (const auto& s : slots) out += (out.empty() ? "" : " ") + s;
  return out;
}

/// Sign of bringing the word to adjacent (upper, lower) pairs in the order of
/// the upper slots, by bubble sort.
inline int word_oracle(const graphcx::SlotWord& w, const std::vector<graphcx::Parity>& parities) {
  std::vector<int> uppers;
  for (int i = 0; i < w.size(); ++i)
    if (w.slots[static_cast<std::size_t>(i)].kind == graphcx::SlotKind::upper) uppers.push_back(i);
  std::vector<int> target(static_cast<std::size_t>(w.size()));
  for (std::size_t k = 0; k < uppers.size(); ++k) {
    target[static_cast<std::size_t>(uppers[k])] = static_cast<int>(2 * k);
    target[static_cast<std::size_t>(w.mate[static_cast<std::size_t>(uppers[k])])] = static_cast<int>(2 * k + 1);
  }
  std::vector<int> odd(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i)
    odd[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] = parities[static_cast<std::size_t>(i)].value();
  return oracle::bubble_sign(target, odd);
}

}  // namespace fixtures
