#include "graphcx/graded.hpp"

#include <algorithm>
#include <numeric>

#include "graphcx/errors.hpp"

namespace graphcx {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar s(numerator, denominator);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(const std::string& text) {
  Scalar s;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || s.set_str(t, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (sgn(s.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_string(const DualScalar& s) {
  if (is_zero(s.t)) return to_string(s.value);
  std::string out = is_zero(s.value) ? std::string() : to_string(s.value);
  std::string tp = to_string(s.t);
  if (!out.empty() && tp.front() != '-') out += '+';
  return out + tp + "t";
}

std::ostream& operator<<(std::ostream& os, const DualScalar& s) { return os << to_string(s); }

GradedBasis::GradedBasis(std::vector<Parity> parities) : parities_(std::move(parities)) {
  if (parities_.empty()) throw StructureError("graded basis must be nonempty");
}

GradedBasis GradedBasis::uniform(int dim, Parity p) {
  return GradedBasis(std::vector<Parity>(static_cast<std::size_t>(dim), p));
}

Parity GradedBasis::total(std::span<const int> indices) const {
  Parity p;
  for (int i : indices) p = p + parity(i);
  return p;
}

GradedBasis GradedBasis::reversed() const {
  std::vector<Parity> out;
  out.reserve(parities_.size());
  for (Parity p : parities_) out.push_back(p.flipped());
  return GradedBasis(std::move(out));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero(images.size());
  std::transform(images.begin(), images.end(), zero.begin(), [](int v) { return v - 1; });
  return Permutation(std::move(zero));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = (*this)(other(static_cast<int>(i)));
  return Permutation(std::move(out));
}

int permutation_sign(const Permutation& sigma) {
  int inversions = 0;
  const auto& im = sigma.images();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int koszul_sign(const Permutation& sigma, std::span<const Parity> parities) {
  if (static_cast<int>(parities.size()) != sigma.size())
    throw std::invalid_argument("koszul_sign: parity count does not match permutation degree");
  const auto& im = sigma.images();
  int odd_inversions = 0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (!parities[static_cast<std::size_t>(im[i])].is_odd()) continue;
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j] && parities[static_cast<std::size_t>(im[j])].is_odd()) ++odd_inversions;
  }
  return odd_inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> unshuffles(int l, int r) {
  if (l < 0 || r < 0) throw std::invalid_argument("unshuffles: negative block size");
  const int n = l + r;
  std::vector<Permutation> out;
  std::vector<int> first(static_cast<std::size_t>(l));
  std::iota(first.begin(), first.end(), 0);
  while (true) {
    std::vector<int> images = first;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int v : first) used[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)]) images.push_back(v);
    out.emplace_back(std::move(images));
    // next l-subset in lexicographic order
    int i = l - 1;
    while (i >= 0 && first[static_cast<std::size_t>(i)] == n - l + i) --i;
    if (i < 0) break;
    ++first[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) first[static_cast<std::size_t>(j)] = first[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace graphcx
