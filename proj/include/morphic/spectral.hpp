#pragma once

/**
 * @file spectral.hpp
 * Incidence matrices, Parikh vectors, primitivity and the power-method
 * estimate of the dominant eigenvalue.
 *
 * Lengths of iterated images grow exponentially, so all counts are exact
 * big naturals. Comparisons go through 30-digit decimal logarithms, which keeps
 * the outcome independent of the floating-point hardware.
 */

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "morphic/words.hpp"

namespace morphic {

using Natural = boost::multiprecision::cpp_int;
using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<30>>;

/// F(i, j) = number of occurrences of i in f(j).
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  explicit IncidenceMatrix(std::size_t n) : n_(n), entries_(n * n, Natural(0)) {}

  static IncidenceMatrix identity(std::size_t n) {
    IncidenceMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  Natural& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Natural& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  Natural column_sum(std::size_t j) const {
    Natural s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j);
    return s;
  }

  friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::alphabet_mismatch, "matrix sizes differ");
    IncidenceMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  IncidenceMatrix power(unsigned k) const {
    IncidenceMatrix result = identity(n_);
    IncidenceMatrix base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Natural> entries_;
};

inline IncidenceMatrix incidence_matrix(const Morphism& f) {
  IncidenceMatrix m(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    for (Symbol i : f.image(static_cast<Symbol>(j))) m(i, j) += 1;
  return m;
}

/// Occurrence counts of every symbol in f^k(a), by k matrix-vector products.
inline std::vector<Natural> parikh_vector(const Morphism& f, Symbol a, unsigned k) {
  const IncidenceMatrix m = incidence_matrix(f);
  const std::size_t n = f.size();
  std::vector<Natural> v(n, Natural(0));
  v.at(a) = 1;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Natural> next(n, Natural(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (m(i, j) != 0) next[i] += m(i, j) * v[j];
    }
    v = std::move(next);
  }
  return v;
}

inline Natural iterate_length(const Morphism& f, Symbol a, unsigned k) {
  Natural total = 0;
  for (const auto& c : parikh_vector(f, a, k)) total += c;
  return total;
}

/// The ratio |f^{n+1}(a)| / |f^n(a)|, kept as an exact fraction.
struct EigenEstimate {
  Natural numerator;
  Natural denominator;
  unsigned iterations = 0;

  // Integer part taken exactly so integral ratios come out exact.
  Decimal value() const {
    const Natural whole = numerator / denominator;
    return Decimal(whole) + Decimal(numerator - whole * denominator) / Decimal(denominator);
  }
  Decimal log() const { return boost::multiprecision::log(value()); }
  double approx() const { return value().convert_to<double>(); }
};

inline EigenEstimate estimate_eigenvalue(const Morphism& f, Symbol a = 0, unsigned n = 8) {
  EigenEstimate e;
  e.iterations = n;
  e.denominator = iterate_length(f, a, n);
  e.numerator = iterate_length(f, a, n + 1);
  return e;
}

/// Some power F^k with 1 <= k <= (n-1)^2 + 1 is entrywise positive. Only the
/// zero pattern is tracked.
inline bool is_primitive(const Morphism& f) {
  const std::size_t n = f.size();
  std::vector<bool> base(n * n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (Symbol i : f.image(static_cast<Symbol>(j))) base[i * n + j] = true;

  auto all_positive = [](const std::vector<bool>& m) {
    return std::all_of(m.begin(), m.end(), [](bool b) { return b; });
  };

  std::vector<bool> cur = base;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (all_positive(cur)) return true;
    std::vector<bool> next(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (!cur[i * n + l]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (base[l * n + j]) next[i * n + j] = true;
      }
    cur = std::move(next);
  }
  return false;
}

}  // namespace morphic
