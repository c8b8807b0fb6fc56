#include "degenkit/mukai.hpp"

#include "degenkit/error.hpp"

namespace degenkit {

namespace mb = mukai_basis;

IntMatrix e8_cartan() {
  // Bourbaki: 1-3-4-5-6-7-8 chain, node 2 attached to node 4.
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) {
    c(e[0], e[1]) = -1;
    c(e[1], e[0]) = -1;
  }
  return c;
}

IntMatrix hyperbolic_plane() { return IntMatrix{{0, 1}, {1, 0}}; }

IntegerLattice k3_lattice() {
  IntMatrix g(mb::kH2Rank, mb::kH2Rank);
  const IntMatrix e8m = -e8_cartan();
  g.set_block(0, 0, e8m);
  g.set_block(8, 8, e8m);
  for (std::size_t k = 0; k < 3; ++k) g.set_block(16 + 2 * k, 16 + 2 * k, hyperbolic_plane());
  return {g};
}

IntegerLattice mukai_lattice() {
  IntMatrix g(mb::kRank, mb::kRank);
  g.set_block(mb::kH2Begin, mb::kH2Begin, k3_lattice().gram);
  g(mb::kH0, mb::kH4) = -1;
  g(mb::kH4, mb::kH0) = -1;
  return {g};
}

bool is_even(const IntegerLattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (!mpz_even_p(lattice.gram(i, i).get_mpz_t())) return false;
  }
  return true;
}

IntVector MukaiVector::flatten() const {
  IntVector v;
  v.reserve(2 + a1.size());
  v.push_back(a0);
  v.insert(v.end(), a1.begin(), a1.end());
  v.push_back(a2);
  return v;
}

Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b, const IntMatrix& h2_gram) {
  if (!h2_gram.is_square() || a.a1.size() != h2_gram.rows() || b.a1.size() != h2_gram.rows()) {
    throw Error(Errc::DimensionMismatch, "H^2 parts must match the H^2 Gram matrix");
  }
  return bilinear(a.a1, h2_gram, b.a1) - a.a0 * b.a2 - a.a2 * b.a0;
}

bool is_isometry(const IntMatrix& m, const IntegerLattice& lattice) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank()) {
    throw Error(Errc::DimensionMismatch, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                             ", lattice rank is " + std::to_string(lattice.rank()));
  }
  return m.transpose() * lattice.gram * m == lattice.gram;
}

IntMatrix isometry_inverse(const IntMatrix& m, const IntegerLattice& lattice) {
  const RatMatrix inv = inverse(to_rational(lattice.gram)) * to_rational(m.transpose() * lattice.gram);
  IntMatrix out(inv.rows(), inv.cols());
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    for (std::size_t c = 0; c < inv.cols(); ++c) {
      if (inv(r, c).get_den() != 1) throw Error(Errc::DimensionMismatch, "inverse is not integral");
      out(r, c) = inv(r, c).get_num();
    }
  }
  return out;
}

IntMatrix reflection(const IntVector& v, const IntegerLattice& lattice) {
  const Integer norm = bilinear(v, lattice.gram, v);
  if (norm != 2 && norm != -2) throw Error(Errc::DimensionMismatch, "reflection needs a vector of norm ±2");
  const std::size_t n = lattice.rank();
  // column j of the reflection is e_j - (2 (e_j·v)/(v·v)) v = e_j ∓ (G v)_j v
  IntVector gv(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) gv[j] += lattice.gram(j, k) * v[k];
  IntMatrix r = IntMatrix::identity(n);
  const Integer scale = norm == 2 ? Integer(-1) : Integer(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) += scale * gv[j] * v[i];
  return r;
}

bool is_period_point(const PeriodPoint& p, const IntegerLattice& lattice) {
  if (p.re.size() != lattice.rank() || p.im.size() != lattice.rank()) {
    throw Error(Errc::DimensionMismatch, "period vectors must have length " + std::to_string(lattice.rank()));
  }
  const Rational xx = bilinear(p.re, lattice.gram, p.re);
  const Rational yy = bilinear(p.im, lattice.gram, p.im);
  const Rational xy = bilinear(p.re, lattice.gram, p.im);
  // (x, y) = (0, 0) forces xx + yy = 0 and fails the positivity test.
  return xx == yy && xy == 0 && xx + yy > 0;
}

bool is_hodge_isometry(const IntMatrix& m, const PeriodPoint& x, const PeriodPoint& y, const IntegerLattice& lattice) {
  if (!is_period_point(x, lattice)) throw Error(Errc::InvalidPeriod, "source period fails the period conditions");
  if (!is_period_point(y, lattice)) throw Error(Errc::InvalidPeriod, "target period fails the period conditions");
  if (!is_isometry(m, lattice)) return false;

  const std::size_t n = lattice.rank();
  std::vector<GaussianRational> image(n);
  std::vector<GaussianRational> target(n);
  bool image_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 0) continue;
      const Rational mij(m(i, j));
      image[i] += GaussianRational(mij * x.re[j], mij * x.im[j]);
    }
    target[i] = GaussianRational(y.re[i], y.im[i]);
    if (!image[i].is_zero()) image_zero = false;
  }
  if (image_zero) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(image[i] * target[j] - image[j] * target[i]).is_zero()) return false;
    }
  }
  return true;
}

std::string_view to_string(KulikovType type) {
  switch (type) {
    case KulikovType::I: return "Type I";
    case KulikovType::II: return "Type II";
    case KulikovType::III: return "Type III";
  }
  return "?";
}

KulikovType classify_monodromy(const IntMatrix& t) {
  if (!t.is_square()) throw Error(Errc::DimensionMismatch, "monodromy operator must be square");
  const IntMatrix n = t - IntMatrix::identity(t.rows());
  if (n.is_zero()) return KulikovType::I;
  const IntMatrix n2 = n * n;
  if (n2.is_zero()) return KulikovType::II;
  if ((n2 * n).is_zero()) return KulikovType::III;
  throw Error(Errc::NotKulikov, "(T - id)^3 != 0");
}

}  // namespace degenkit
