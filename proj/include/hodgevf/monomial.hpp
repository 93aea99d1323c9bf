#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace hodgevf {

// Upper bound on the number of ring variables. Exponent vectors are stored
// inline so monomials are cheap to copy, compare and hash.
inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector (m_1, ..., m_n) of x_1^{m_1} ... x_n^{m_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  std::vector<unsigned> exponents() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exp_ == b.exp_;
  }
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
};

// Graded reverse lexicographic comparison: negative if a < b, zero if equal,
// positive if a > b. The canonical order of every Polynomial.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials in nvars variables of total degree exactly d, grevlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

// All monomials with sum_i weights[i] * m_i == degree (weights positive
// integers), grevlex descending.
std::vector<Monomial> monomials_of_weighted_degree(std::span<const long> weights, long degree);

}  // namespace hodgevf
