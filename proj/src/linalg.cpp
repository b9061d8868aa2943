#include "secdof/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace secdof {

namespace {

Eigen::JacobiSVD<ComplexMatrix> svd_full_v(const ComplexMatrix& a) {
  return Eigen::JacobiSVD<ComplexMatrix>(a, Eigen::ComputeFullV);
}

}  // namespace

ComplexMatrix nullspace(const ComplexMatrix& a, Tolerance tol) {
  const auto svd = svd_full_v(a);
  const auto& sigma = svd.singularValues();
  // a numerically-zero matrix (sigma_max at the absolute floor) annihilates
  // everything; a relative cutoff would mistake its rounding noise for rank
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  if (sigma_max <= tol.eps()) return svd.matrixV();
  const double cutoff = tol.eps() * sigma_max;
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  const Eigen::Index nullity = a.cols() - r;
  return svd.matrixV().rightCols(nullity);
}

ComplexMatrix orth(const ComplexMatrix& a, Tolerance tol) {
  if (a.norm() <= tol.eps())
    throw Error(Errc::ZeroMatrix, "cannot orthonormalize a zero matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol.eps() * sigma(0);
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

ComplexMatrix intersect(const std::vector<ComplexMatrix>& bases,
                        Tolerance tol) {
  if (bases.empty())
    throw Error(Errc::DimensionMismatch, "intersect needs at least one basis");
  const Eigen::Index n = bases.front().rows();
  for (const auto& b : bases) {
    if (b.rows() != n) {
      std::ostringstream msg;
      msg << "bases live in different spaces (" << b.rows() << " vs " << n
          << " rows)";
      throw Error(Errc::DimensionMismatch, msg.str());
    }
  }
  ComplexMatrix stacked(n * static_cast<Eigen::Index>(bases.size()), n);
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  for (std::size_t i = 0; i < bases.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) =
        eye - bases[i] * bases[i].adjoint();
  return nullspace(stacked, tol);
}

double logdet_psd(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(Errc::DimensionMismatch, "logdet_psd needs a square matrix");
  const double scale = a.norm();
  if ((a - a.adjoint()).norm() > 1e-10 * scale)
    throw Error(Errc::NotHermitian, "matrix is not Hermitian at 1e-10");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(
      ((a + a.adjoint()) * 0.5).eval(), Eigen::EigenvaluesOnly);
  const auto& lambda = eig.eigenvalues();
  const double floor = -1e-9 * lambda.cwiseAbs().maxCoeff();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < floor) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda(i) << " below PSD floor " << floor;
      throw Error(Errc::NotPsd, msg.str());
    }
    logdet += lambda(i) > 0.0 ? std::log2(lambda(i))
                              : -std::numeric_limits<double>::infinity();
  }
  return logdet;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b,
                    Tolerance tol) {
  if (a.rows() != a.cols())
    throw Error(Errc::DimensionMismatch, "solve needs a square system");
  if (b.rows() != a.rows())
    throw Error(Errc::DimensionMismatch,
                "right-hand side row count does not match the system");
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a);
  qr.setThreshold(tol.eps());
  if (qr.rank() < a.rows())
    throw Error(Errc::Singular, "system is rank deficient at tolerance");
  return qr.solve(b);
}

Eigen::Index rank(const ComplexMatrix& a, Tolerance tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= tol.eps()) return 0;
  const double cutoff = tol.eps() * sigma(0);
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  return r;
}

ComplexMatrix complement(const ComplexMatrix& q) {
  const Eigen::Index n = q.rows();
  if (q.cols() == 0) return ComplexMatrix::Identity(n, n);
  if (q.cols() >= n) return ComplexMatrix(n, 0);
  Eigen::HouseholderQR<ComplexMatrix> qr(q);
  ComplexMatrix full = qr.householderQ();
  return full.rightCols(n - q.cols());
}

}  // namespace secdof
