#include "glbrown/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace glbrown {

bool is_hermitian(const CMatrix& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_antihermitian(const CMatrix& a, double tol) {
  return (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMatrix& a, double tol) { return unitary_defect(a) <= tol; }

double unitary_defect(const CMatrix& a) {
  CMatrix d = a.adjoint() * a;
  d.diagonal().array() -= 1.0;
  return d.cwiseAbs().maxCoeff();
}

LieBasis build_basis(int n) {
  if (n < 1) throw std::invalid_argument("build_basis: n must be >= 1");
  LieBasis basis;
  basis.n = n;
  basis.elements.reserve(std::size_t(n) * n);
  const double dn = std::sqrt(double(n));
  const double d2n = std::sqrt(2.0 * n);
  for (int j = 0; j < n; ++j) {
    CMatrix e = CMatrix::Zero(n, n);
    e(j, j) = Complex(0, 1) / dn;
    basis.elements.push_back(std::move(e));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix a = CMatrix::Zero(n, n);
      a(j, k) = 1.0 / d2n;
      a(k, j) = -1.0 / d2n;
      basis.elements.push_back(std::move(a));
      CMatrix b = CMatrix::Zero(n, n);
      b(j, k) = Complex(0, 1) / d2n;
      b(k, j) = Complex(0, 1) / d2n;
      basis.elements.push_back(std::move(b));
    }
  }
  return basis;
}

Eigen::MatrixXd gram_matrix(const LieBasis& basis) {
  const int m = int(basis.elements.size());
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double v = -double(basis.n) * (basis.elements[i] * basis.elements[j]).trace().real();
      g(i, j) = g(j, i) = v;
    }
  return g;
}

namespace {
void check_dim(const CMatrix& a, const LieBasis& basis, const char* who) {
  if (a.rows() != a.cols() || a.rows() != basis.n)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}
}  // namespace

CMatrix magic_sandwich(const CMatrix& a, const LieBasis& basis, Sector sector) {
  check_dim(a, basis, "magic_sandwich");
  CMatrix sum = CMatrix::Zero(basis.n, basis.n);
  for (const CMatrix& xi : basis.elements) sum += xi * a * xi;
  // (i xi) A (i xi) = -xi A xi
  return sector == Sector::Plus ? sum : CMatrix(-sum);
}

CMatrix magic_project(const CMatrix& a, const LieBasis& basis, Sector sector) {
  check_dim(a, basis, "magic_project");
  CMatrix sum = CMatrix::Zero(basis.n, basis.n);
  for (const CMatrix& xi : basis.elements) sum += tr(a * xi) * xi;
  return sector == Sector::Plus ? sum : CMatrix(-sum);
}

}  // namespace glbrown
