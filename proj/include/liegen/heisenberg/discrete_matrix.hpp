#pragma once

#include <stdexcept>
#include <vector>

#include "liegen/numeric/sqrt_rational.hpp"

namespace liegen::hermite {

/// Truncated N x N matrix of an h3 operator in the number basis, entries
/// indexed (n', n) from 0. Products of ladder matrices never mix radicals
/// within one entry, so SqrtRational entries stay closed.
class DiscreteMatrix {
 public:
  explicit DiscreteMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dimension() const { return n_; }

  const SqrtRational& operator()(std::size_t row, std::size_t col) const { return entries_.at(row * n_ + col); }
  SqrtRational& operator()(std::size_t row, std::size_t col) { return entries_.at(row * n_ + col); }

  friend DiscreteMatrix operator*(const DiscreteMatrix& a, const DiscreteMatrix& b) {
    a.check(b);
    DiscreteMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend DiscreteMatrix operator+(DiscreteMatrix a, const DiscreteMatrix& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend DiscreteMatrix operator-(DiscreteMatrix a, const DiscreteMatrix& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] = a.entries_[i] - b.entries_[i];
    return a;
  }

  friend bool operator==(const DiscreteMatrix&, const DiscreteMatrix&) = default;

  bool is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
  }

 private:
  void check(const DiscreteMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("discrete matrix dimensions differ");
  }

  std::size_t n_;
  std::vector<SqrtRational> entries_;
};

enum class DiscreteOp { a_minus, a_plus, identity };

/// <n'|a-|n> = sqrt(n) delta_{n',n-1}, <n'|a+|n> = sqrt(n+1) delta_{n',n+1},
/// truncated to N x N.
inline DiscreteMatrix discrete_matrix(DiscreteOp op, std::size_t n) {
  if (n < 2) throw std::invalid_argument("discrete matrix needs dimension >= 2");
  DiscreteMatrix m(n);
  for (std::size_t col = 0; col < n; ++col) {
    switch (op) {
      case DiscreteOp::a_minus:
        if (col >= 1) m(col - 1, col) = SqrtRational::sqrt(static_cast<long long>(col));
        break;
      case DiscreteOp::a_plus:
        if (col + 1 < n) m(col + 1, col) = SqrtRational::sqrt(static_cast<long long>(col + 1));
        break;
      case DiscreteOp::identity: m(col, col) = 1; break;
    }
  }
  return m;
}

}  // namespace liegen::hermite
