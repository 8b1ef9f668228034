#include "bkx/plucker.hpp"

#include <cmath>

#include "bkx/errors.hpp"

namespace bkx {

namespace {

using Mat = std::vector<std::vector<mpq_class>>;

Mat zero_mat(int r, int c) { return Mat(r, std::vector<mpq_class>(c, mpq_class(0))); }

void check_rank(int n) {
  if (n < 1 || n > 8) throw DomainError("rank n out of range [1,8]");
}

void check_block(int n, const Mat& m, const char* what) {
  if (static_cast<int>(m.size()) != n)
    throw DomainError(std::string(what) + " must be n x n");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw DomainError(std::string(what) + " must be n x n");
}

void check_symmetric(int n, const Mat& z) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (z[i][j] != z[j][i]) throw NotSymplectic("unipotent block is not symmetric");
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int r = a.size(), m = b.size(), c = b[0].size();
  Mat out = zero_mat(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Inverse by Gauss-Jordan elimination; nullopt-style via thrown error.
Mat mat_inverse(const Mat& a) {
  const int n = a.size();
  Mat work = a;
  Mat inv = zero_mat(n, n);
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularLevi("levi block is singular");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class d = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      const mpq_class f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

mpq_class rational_power(const mpq_class& x, long e) {
  if (x == 0) throw DomainError("zero base in rational power");
  mpz_class num = x.get_num(), den = x.get_den();
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), a);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), a);
  mpq_class out = e < 0 ? mpq_class(pd, pn) : mpq_class(pn, pd);
  out.canonicalize();
  return out;
}

mpq_class submatrix_det(const Mat& rows, const std::vector<int>& cols) {
  const int n = cols.size();
  Mat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rows[i][cols[j] - 1];
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return mpq_class(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const mpq_class d = m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / d;
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

void check_prime(long p) {
  if (p < 2) throw DomainError("place must be a prime");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw DomainError("place must be a prime");
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(int n, Mat a) : n_(n), a_(std::move(a)) {
  check_rank(n_);
  if (static_cast<int>(a_.size()) != 2 * n_)
    throw DomainError("matrix must be 2n x 2n");
  for (const auto& row : a_)
    if (static_cast<int>(row.size()) != 2 * n_)
      throw DomainError("matrix must be 2n x 2n");
  // g J g^t = J with J = [[0, I], [-I, 0]].
  for (int i = 0; i < 2 * n_; ++i) {
    for (int j = 0; j < 2 * n_; ++j) {
      mpq_class acc = 0;
      for (int k = 0; k < n_; ++k)
        acc += a_[i][k] * a_[j][n_ + k] - a_[i][n_ + k] * a_[j][k];
      const mpq_class want = (j == i + n_) ? 1 : (i == j + n_) ? -1 : 0;
      if (acc != want) throw NotSymplectic("matrix fails g J g^t = J");
    }
  }
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
  check_rank(n);
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i][i] = 1;
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::unipotent(int n, const Mat& z) {
  check_rank(n);
  check_block(n, z, "unipotent block");
  check_symmetric(n, z);
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][n + j] = z[i][j];
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::lower_unipotent(int n, const Mat& z) {
  check_rank(n);
  check_block(n, z, "unipotent block");
  check_symmetric(n, z);
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[n + i][j] = z[i][j];
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::levi(int n, const Mat& a) {
  check_rank(n);
  check_block(n, a, "levi block");
  Mat inv = mat_inverse(a);
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = a[i][j];
      m[n + i][n + j] = inv[j][i];  // transpose of the inverse
    }
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::siegel_torus(int n, int c, const mpq_class& x) {
  check_rank(n);
  if (x == 0) throw DomainError("torus parameter must be nonzero");
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i][i] = 1;
  m[0][0] = rational_power(x, -static_cast<long>(c));
  m[n][n] = rational_power(x, c);
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::weyl_j(int n) {
  check_rank(n);
  Mat m = zero_mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m[i][n + i] = 1;
    m[n + i][i] = -1;
  }
  return SymplecticMatrix(n, std::move(m));
}

SymplecticMatrix SymplecticMatrix::from_entries(int n, Mat entries) {
  return SymplecticMatrix(n, std::move(entries));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
  if (n_ != o.n_) throw DomainError("rank mismatch in matrix product");
  return SymplecticMatrix(n_, mat_mul(a_, o.a_));
}

WedgeVector WedgeVector::scaled(const mpq_class& s) const {
  WedgeVector out = *this;
  for (auto& c : out.coords) c *= s;
  return out;
}

std::vector<std::vector<int>> wedge_index_sets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

WedgeVector pluecker(const SymplecticMatrix& g) {
  const int n = g.n();
  Mat bottom(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) bottom[i][j] = g.at(n + i, j);
  WedgeVector w;
  w.n = n;
  for (const auto& cols : wedge_index_sets(n))
    w.coords.push_back(submatrix_det(bottom, cols));
  return w;
}

long val_p(const mpq_class& x, long p) {
  check_prime(p);
  if (x == 0) throw DomainError("valuation of zero");
  mpz_class pp(p), tmp;
  const long vn = mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), pp.get_mpz_t());
  const long vd = mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), pp.get_mpz_t());
  return vn - vd;
}

long wedge_valuation(const WedgeVector& w, long p) {
  bool any = false;
  long best = 0;
  for (const auto& c : w.coords) {
    if (c == 0) continue;
    const long v = val_p(c, p);
    if (!any || v < best) best = v;
    any = true;
  }
  if (!any) throw DomainError("wedge vector is zero");
  return best;
}

mpq_class norm_padic(const SymplecticMatrix& g, long p) {
  const long c = wedge_valuation(pluecker(g), p);
  return rational_power(mpq_class(p), -c);
}

double norm_arch(const SymplecticMatrix& g) {
  double acc = 0.0;
  for (const auto& c : pluecker(g).coords) {
    const double x = c.get_d();
    acc += x * x;
  }
  return std::sqrt(acc);
}

long coset_index(const SymplecticMatrix& g, long p) {
  return wedge_valuation(pluecker(g), p);
}

}  // namespace bkx
