#include "degenkit/matrix.hpp"

#include <utility>

namespace degenkit {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Signature signature(const IntMatrix& symmetric) {
  if (!is_symmetric(symmetric)) throw Error(Errc::DimensionMismatch, "signature needs a symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  Signature sig;
  // Congruence transformations A -> PᵀAP applied to rows and columns alike.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& factor) {
    for (std::size_t c = 0; c < n; ++c) a(target, c) += factor * a(source, c);
    for (std::size_t r = 0; r < n; ++r) a(r, target) += factor * a(r, source);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish; create one from an off-diagonal entry.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a(i, j) != 0) {
            add_multiple(i, j, Rational(1));
            pivot = i;
            found = true;
          }
        }
      }
      if (!found) {
        sig.zero += n - k;
        break;
      }
    }
    swap_index(k, pivot);
    const Rational d = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = -a(i, k) / d;
      add_multiple(i, k, factor);
    }
    if (d > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::DimensionMismatch, "matrix is singular");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(k, c), a(pivot, c));
      std::swap(inv(k, c), inv(pivot, c));
    }
    const Rational d = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= d;
      inv(k, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k) == 0) continue;
      const Rational f = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

bool is_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

Rational bilinear(const RatVector& x, const IntMatrix& gram, const RatVector& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols()) {
    throw Error(Errc::DimensionMismatch, "vector length does not match the Gram matrix");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (gram(i, j) != 0) row += Rational(gram(i, j)) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

Integer bilinear(const IntVector& x, const IntMatrix& gram, const IntVector& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols()) {
    throw Error(Errc::DimensionMismatch, "vector length does not match the Gram matrix");
  }
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (gram(i, j) != 0) row += gram(i, j) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

}  // namespace degenkit
