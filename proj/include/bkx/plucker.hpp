#pragma once

#include <gmpxx.h>

#include <vector>

namespace bkx {

// Exact 2n x 2n rational matrix satisfying g J g^t = J for the standard
// symplectic form J = [[0, I], [-I, 0]].  The constructor verifies the
// condition and throws NotSymplectic otherwise.
class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(int n);
  // Block matrix [[I, Z], [0, I]]; Z must be symmetric n x n.
  static SymplecticMatrix unipotent(int n, const std::vector<std::vector<mpq_class>>& z);
  // Block matrix [[I, 0], [Z, I]]; Z must be symmetric n x n.
  static SymplecticMatrix lower_unipotent(int n, const std::vector<std::vector<mpq_class>>& z);
  // Block matrix diag(A, A^-t); throws SingularLevi when A is not invertible.
  static SymplecticMatrix levi(int n, const std::vector<std::vector<mpq_class>>& a);
  // The torus section of the boundary degree: identity except for x^-c at
  // slot (1,1) and x^c at slot (n+1, n+1); x must be a nonzero rational.
  static SymplecticMatrix siegel_torus(int n, int c, const mpq_class& x);
  // The standard form matrix J itself (an element of the group).
  static SymplecticMatrix weyl_j(int n);
  // Arbitrary entries, checked.
  static SymplecticMatrix from_entries(int n, std::vector<std::vector<mpq_class>> entries);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const mpq_class& at(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<mpq_class>>& entries() const { return a_; }

  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  bool operator==(const SymplecticMatrix& o) const = default;

 private:
  SymplecticMatrix(int n, std::vector<std::vector<mpq_class>> a);
  int n_;
  std::vector<std::vector<mpq_class>> a_;
};

// Coordinates of the wedge of the bottom n rows on the standard basis of
// the n-th exterior power: entry t is the n x n minor of the bottom block
// on the t-th column subset, subsets of {1..2n} in lexicographic order.
struct WedgeVector {
  int n = 1;
  std::vector<mpq_class> coords;

  bool operator==(const WedgeVector&) const = default;
  WedgeVector scaled(const mpq_class& s) const;
};

WedgeVector pluecker(const SymplecticMatrix& g);

// Column subsets of size n out of {1..2n}, lexicographic, 1-based; exposed
// so callers can label wedge coordinates.
std::vector<std::vector<int>> wedge_index_sets(int n);

// p-adic valuation of the wedge vector: min over coordinates.
long wedge_valuation(const WedgeVector& w, long p);

// |g|_p = p^(-c) where c is the minimal coordinate valuation; exact.
mpq_class norm_padic(const SymplecticMatrix& g, long p);

// Euclidean norm of the wedge vector (the degree of the real place is 1).
double norm_arch(const SymplecticMatrix& g);

// The boundary-degree index c of the orbit of g: |g|_p = p^(-c).
long coset_index(const SymplecticMatrix& g, long p);

long val_p(const mpq_class& x, long p);  // valuation of a nonzero rational

}  // namespace bkx
