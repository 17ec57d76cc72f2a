#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace glbrown {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Normalized trace tr = Tr / n.
inline Complex tr(const CMatrix& a) { return a.trace() / double(a.rows()); }

bool is_hermitian(const CMatrix& a, double tol = 1e-12);
bool is_antihermitian(const CMatrix& a, double tol = 1e-12);
bool is_unitary(const CMatrix& a, double tol = 1e-12);

// Largest deviation of a*a from the identity; the unitarity defect.
double unitary_defect(const CMatrix& a);

// Orthonormal basis of u(n) for the inner product <x,y> = -n Tr(xy):
//   { i E_jj / sqrt(n) }  and, for j < k,
//   { (E_jk - E_kj) / sqrt(2n),  i (E_jk + E_kj) / sqrt(2n) }.
// Every element is anti-Hermitian and the count is exactly n^2.
struct LieBasis {
  int n = 0;
  std::vector<CMatrix> elements;
};

enum class Sector { Plus, Minus };  // Plus = basis itself, Minus = i * basis

LieBasis build_basis(int n);

// Gram matrix under -n Tr(xy); equals the identity for build_basis.
Eigen::MatrixXd gram_matrix(const LieBasis& basis);

// sum_xi xi A xi over the sector.  Closed forms:
//   Plus  -> -tr(A) I,   Minus -> +tr(A) I.
CMatrix magic_sandwich(const CMatrix& a, const LieBasis& basis, Sector sector);

// sum_xi tr(A xi) xi over the sector.  Closed forms:
//   Plus  -> -A / n^2,   Minus -> +A / n^2.
CMatrix magic_project(const CMatrix& a, const LieBasis& basis, Sector sector);

}  // namespace glbrown
