#include "gring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gring::linalg {

IntMat identity(std::size_t n) {
  IntMat a(n, IntRow(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntRow(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMat c(n, IntRow(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

IntRow mul(const IntRow& v, const IntMat& a) {
  if (a.empty()) return {};
  IntRow c(a[0].size(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[t] * a[t][j];
  }
  return c;
}

IntRow kron(const IntRow& a, const IntRow& b) {
  IntRow c(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
  return c;
}

IntMat kron(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
  IntMat c(ra * rb, IntRow(ca * cb));
  for (std::size_t i1 = 0; i1 < ra; ++i1)
    for (std::size_t i2 = 0; i2 < rb; ++i2)
      for (std::size_t j1 = 0; j1 < ca; ++j1)
        for (std::size_t j2 = 0; j2 < cb; ++j2)
          c[i1 * rb + i2][j1 * cb + j2] = a[i1][j1] * b[i2][j2];
  return c;
}

mpz_class det(IntMat a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det needs a square matrix");
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

IntMat adjugate(const IntMat& a) {
  std::size_t n = a.size();
  mpz_class d = det(a);
  if (d == 0) throw std::invalid_argument("adjugate of a singular matrix");
  // Rational Gauss-Jordan on [a | I], then scale the inverse by det.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = mpq_class(a[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("adjugate: unexpected singularity");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  IntMat adj(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = m[i][n + j] * mpq_class(d);
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("adjugate entries must be integral");
      adj[i][j] = v.get_num();
    }
  return adj;
}

namespace {

void row_submul(IntRow& target, const IntRow& source, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

void row_negate(IntRow& r) {
  for (auto& x : r) x = -x;
}

}  // namespace

std::vector<std::size_t> hnf_inplace(IntMat& a, IntMat* u) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  if (u) *u = identity(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    // Euclidean elimination within the column, smallest magnitude on top.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a[i][col] == 0) continue;
        if (best == m || cmpabs(a[i][col], a[best][col]) < 0) best = i;
      }
      if (best == m) break;
      if (best != r) {
        std::swap(a[best], a[r]);
        if (u) std::swap((*u)[best], (*u)[r]);
      }
      bool reduced = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
        row_submul(a[i], a[r], q);
        if (u) row_submul((*u)[i], (*u)[r], q);
        if (a[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (r < m && a[r][col] != 0) {
      if (a[r][col] < 0) {
        row_negate(a[r]);
        if (u) row_negate((*u)[r]);
      }
      pivots.push_back(col);
      ++r;
    }
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][pivots[k]].get_mpz_t(), a[k][pivots[k]].get_mpz_t());
      row_submul(a[i], a[k], q);
      if (u) row_submul((*u)[i], (*u)[k], q);
    }
  }
  return pivots;
}

IntMat left_kernel(const IntMat& a) {
  IntMat work = a;
  IntMat u;
  auto pivots = hnf_inplace(work, &u);
  IntMat kernel;
  for (std::size_t i = pivots.size(); i < work.size(); ++i) kernel.push_back(u[i]);
  return kernel;
}

std::vector<mpz_class> smith_diagonal(IntMat a) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // Find the minimal-magnitude nonzero entry in the remaining block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == m || cmpabs(a[i][j], a[pi][pj]) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // block is zero
    std::swap(a[t], a[pi]);
    for (std::size_t i = t; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Enforce divisibility of the remaining block by the pivot.
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
          for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace gring::linalg
