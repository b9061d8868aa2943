#pragma once

// Test-only oracles, deliberately independent of the library's
// decomposition paths: ranks come from Gram determinants expanded by
// Laplace, intersection dimensions from the kernel of a horizontally
// concatenated coefficient system. Exponential-cost is fine at test sizes.

#include <complex>
#include <vector>

#include "secdof/linalg.hpp"
#include "secdof/rng.hpp"

namespace oracle {

using secdof::ComplexMatrix;

// Determinant by Laplace expansion along the first row.
inline std::complex<double> laplace_det(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return a(0, 0);
  std::complex<double> det = 0.0;
  double sign = 1.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    ComplexMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index mc = 0;
      for (Eigen::Index cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, mc++) = a(r, cc);
      }
    }
    det += sign * a(0, c) * laplace_det(minor);
    sign = -sign;
  }
  return det;
}

// Rank as the size of the largest column subset whose normalized Gram
// determinant stays away from zero.
inline int gram_rank(const ComplexMatrix& a, double cutoff = 1e-8) {
  std::vector<Eigen::Index> cols;
  ComplexMatrix unit = a;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const double norm = a.col(c).norm();
    if (norm > cutoff) {
      unit.col(c) /= norm;
      cols.push_back(c);
    }
  }
  int best = 0;
  const int m = static_cast<int>(cols.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Eigen::Index> pick;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) pick.push_back(cols[b]);
    if (static_cast<int>(pick.size()) <= best) continue;
    ComplexMatrix gram(pick.size(), pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (std::size_t j = 0; j < pick.size(); ++j)
        gram(i, j) = unit.col(pick[i]).adjoint() * unit.col(pick[j]);
    if (std::abs(laplace_det(gram)) > cutoff)
      best = static_cast<int>(pick.size());
  }
  return best;
}

inline int gram_nullity(const ComplexMatrix& a, double cutoff = 1e-8) {
  return static_cast<int>(a.cols()) - gram_rank(a, cutoff);
}

// dim of the intersection of the given spans: a vector x = B_1 a_1 lies in
// every span iff [B_1, -B_2, 0, ...; B_1, 0, -B_3, ...] annihilates the
// stacked coefficients, so the dimension is that system's nullity (the B_i
// are injective).
inline int intersect_dim(const std::vector<ComplexMatrix>& bases,
                         double cutoff = 1e-8) {
  const std::size_t k = bases.size();
  if (k == 1) return static_cast<int>(bases[0].cols());
  const Eigen::Index n = bases[0].rows();
  Eigen::Index total_cols = 0;
  for (const auto& b : bases) total_cols += b.cols();
  ComplexMatrix sys = ComplexMatrix::Zero(n * (k - 1), total_cols);
  for (std::size_t i = 1; i < k; ++i) {
    Eigen::Index row = n * (i - 1);
    sys.block(row, 0, n, bases[0].cols()) = bases[0];
    Eigen::Index col = bases[0].cols();
    for (std::size_t j = 1; j < i; ++j) col += bases[j].cols();
    sys.block(row, col, n, bases[i].cols()) = -bases[i];
  }
  return gram_nullity(sys, cutoff);
}

// Frobenius distance between the orthogonal projectors of two orthonormal
// bases; zero iff they span the same subspace.
inline double projector_distance(const ComplexMatrix& p,
                                 const ComplexMatrix& q) {
  return (p * p.adjoint() - q * q.adjoint()).norm();
}

inline ComplexMatrix random_complex(int rows, int cols, std::uint64_t seed) {
  auto rng = secdof::stream_rng(seed, 0);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = secdof::complex_gaussian(rng);
  return m;
}

}  // namespace oracle
