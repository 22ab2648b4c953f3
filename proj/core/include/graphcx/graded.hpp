#pragma once

// Z2-graded sign bookkeeping and exact scalars.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace graphcx {

/// Exact rational number.  mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every constructor goes through
/// make_scalar or is followed by canonicalize().
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);
Scalar parse_scalar(const std::string& text);  // "3", "-2/5"
std::string to_string(const Scalar& s);
inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// a + b t with t^2 = 0.  Carries first-order (infinitesimal) deformations.
struct DualScalar {
  Scalar value;
  Scalar t;

  DualScalar() = default;
  DualScalar(Scalar v) : value(std::move(v)) {}  // NOLINT: implicit embedding
  DualScalar(Scalar v, Scalar tp) : value(std::move(v)), t(std::move(tp)) {}
  DualScalar(long v) : value(v) {}  // NOLINT

  DualScalar& operator+=(const DualScalar& o) {
    value += o.value;
    t += o.t;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    value -= o.value;
    t -= o.t;
    return *this;
  }
  DualScalar& operator*=(const DualScalar& o) {
    t = value * o.t + t * o.value;
    value *= o.value;
    return *this;
  }
  DualScalar& operator*=(const Scalar& s) {
    value *= s;
    t *= s;
    return *this;
  }
  DualScalar& operator/=(const Scalar& s) {
    value /= s;
    t /= s;
    return *this;
  }

  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
  friend DualScalar operator*(DualScalar a, const Scalar& b) { return a *= b; }
  friend DualScalar operator*(const Scalar& b, DualScalar a) { return a *= b; }
  friend DualScalar operator/(DualScalar a, const Scalar& b) { return a /= b; }
  friend DualScalar operator-(DualScalar a) {
    a.value = -a.value;
    a.t = -a.t;
    return a;
  }
  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.value == b.value && a.t == b.t;
  }
};

inline bool is_zero(const DualScalar& s) { return is_zero(s.value) && is_zero(s.t); }
std::string to_string(const DualScalar& s);  // "1/2", "3t", "1/2-3t"
std::ostream& operator<<(std::ostream& os, const DualScalar& s);

/// Element of Z/2: 0 = even, 1 = odd.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : value_(static_cast<std::uint8_t>(v & 1)) {}

  static constexpr Parity even() { return Parity(0); }
  static constexpr Parity odd() { return Parity(1); }

  constexpr int value() const { return value_; }
  constexpr bool is_odd() const { return value_ != 0; }
  constexpr Parity flipped() const { return Parity(value_ + 1); }

  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.value_ + b.value_); }
  /// Product in Z/2; used for exponents (-1)^{pq}.
  friend constexpr Parity operator*(Parity a, Parity b) { return Parity(a.value_ * b.value_); }
  friend constexpr bool operator==(Parity, Parity) = default;

 private:
  std::uint8_t value_ = 0;
};

/// (-1)^p as +1 / -1.
constexpr int sign_of(Parity p) { return p.is_odd() ? -1 : 1; }

/// Parities of a basis e_1..e_m of a graded space.  Never empty.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<Parity> parities);

  static GradedBasis uniform(int dim, Parity p);

  int dim() const { return static_cast<int>(parities_.size()); }
  Parity parity(int i) const { return parities_[static_cast<std::size_t>(i)]; }
  const std::vector<Parity>& parities() const { return parities_; }

  /// Parity of e_{j1} (x) ... (x) e_{jn}.
  Parity total(std::span<const int> indices) const;

  /// Parity reversion: the same basis with every parity flipped.
  GradedBasis reversed() const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<Parity> parities_;
};

/// Bijection of {0..n-1}; images()[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Build from one-based images, as permutations are usually written.
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Classical sign of a permutation, +1 or -1.
int permutation_sign(const Permutation& sigma);

/// Koszul sign of rearranging graded elements x_0..x_{n-1} (parities given
/// per element) into the order x_{sigma(0)}, ..., x_{sigma(n-1)}: every pair
/// of odd elements whose relative order is reversed contributes a factor -1.
int koszul_sign(const Permutation& sigma, std::span<const Parity> parities);

/// Unshuffles of type (l, r): permutations of {0..l+r-1} increasing on the
/// first l positions and on the last r positions, ordered lexicographically
/// by their first block.
std::vector<Permutation> unshuffles(int l, int r);

std::uint64_t binomial(int n, int k);

}  // namespace graphcx
