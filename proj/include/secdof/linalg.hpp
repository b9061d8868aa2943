#pragma once

#include <Eigen/Dense>
#include <vector>

#include "secdof/errors.hpp"

namespace secdof {

// Dense complex matrix, the carrier for channels, precoders and subspace
// bases throughout the library.
using ComplexMatrix = Eigen::MatrixXcd;

// Relative threshold for rank / nullity decisions. Singular values (or
// pivots) below eps * sigma_max count as zero. Channels are generic random
// matrices, so borderline ranks indicate misuse rather than physics.
class Tolerance {
 public:
  Tolerance() = default;
  explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
      throw Error(Errc::ParseError, "tolerance must lie in (0, 1)");
  }
  double eps() const noexcept { return eps_; }

 private:
  double eps_ = 1e-9;
};

// Orthonormal basis of the kernel of `a`. Returns a rows(a.cols) x nullity
// matrix; zero columns when the kernel is trivial.
ComplexMatrix nullspace(const ComplexMatrix& a, Tolerance tol = {});

// Orthonormal basis of the column span of `a`; column count equals
// rank(a, tol). Throws ZeroMatrix when ||a||_F <= tol.
ComplexMatrix orth(const ComplexMatrix& a, Tolerance tol = {});

// Orthonormal basis of the intersection of the given column spans. Every
// basis must have orthonormal columns and the same row count. A vector x
// lies in the intersection iff (I - B B^H) x = 0 for every basis B, so the
// intersection is the kernel of the vertically stacked projector
// complements.
ComplexMatrix intersect(const std::vector<ComplexMatrix>& bases,
                        Tolerance tol = {});

// log2 det(a) for Hermitian positive semidefinite `a`, via the eigenvalues
// of the symmetrized input. -inf for singular PSD input; finite for
// positive definite input.
double logdet_psd(const ComplexMatrix& a);

// Solves a x = b for square full-rank `a`. Throws Singular when `a` is rank
// deficient at `tol`.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b,
                    Tolerance tol = {});

// Number of singular values exceeding tol * sigma_max.
Eigen::Index rank(const ComplexMatrix& a, Tolerance tol = {});

// Orthonormal basis of the orthogonal complement of the (orthonormal)
// columns of `q`. For an n x k input with k < n the result is n x (n - k).
ComplexMatrix complement(const ComplexMatrix& q);

}  // namespace secdof
