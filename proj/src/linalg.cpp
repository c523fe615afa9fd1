#include "sliceopt/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sliceopt {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

SymMatrix::SymMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("matrix is not square");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (entries_(i, j) != entries_(j, i)) throw std::invalid_argument("matrix is not symmetric");
}

SymMatrix SymMatrix::symmetrized(const IntMatrix& raw, bool* doubled) {
  if (raw.rows() != raw.cols()) throw std::invalid_argument("matrix is not square");
  bool symmetric = true;
  for (std::size_t i = 0; i < raw.rows() && symmetric; ++i)
    for (std::size_t j = i + 1; j < raw.cols(); ++j)
      if (raw(i, j) != raw(j, i)) {
        symmetric = false;
        break;
      }
  if (doubled) *doubled = !symmetric;
  if (symmetric) return SymMatrix(raw);
  IntMatrix twice(raw.rows(), raw.cols());
  for (std::size_t i = 0; i < raw.rows(); ++i)
    for (std::size_t j = 0; j < raw.cols(); ++j) twice(i, j) = raw(i, j) + raw(j, i);
  return SymMatrix(std::move(twice));
}

SymMatrix SymMatrix::negated() const {
  IntMatrix out(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out(i, j) = -entries_(i, j);
  return SymMatrix(std::move(out));
}

std::vector<Integer> Decomposition::form(std::size_t i) const {
  std::vector<Integer> col(s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r) col[r] = s(r, i);
  return col;
}

namespace {

struct RationalDiagonalization {
  RatMatrix s;
  std::vector<Rational> d;
};

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(RatMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

RatMatrix inverse(RatMatrix m) {
  const std::size_t n = m.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw std::logic_error("singular congruence transform");
    swap_rows(m, piv, col);
    swap_rows(inv, piv, col);
    Rational scale = 1 / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Symmetric elimination: maintains M with M Q M^T = A until A is diagonal,
// then S = M^{-1}.
RationalDiagonalization diagonalize(const SymMatrix& q) {
  const std::size_t n = q.size();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(q(i, j));
  RatMatrix m = RatMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a(i, i)) > abs(a(piv, piv))) piv = i;

    if (a(piv, piv) == 0) {
      // Zero diagonal on the trailing block: x_i -> x_i + x_j makes
      // A_ii = 2 A_ij nonzero.
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;  // trailing block is zero
      for (std::size_t c = 0; c < n; ++c) {
        a(bi, c) += a(bj, c);
        m(bi, c) += m(bj, c);
      }
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      piv = bi;
    }

    if (piv != k) {
      swap_rows(a, piv, k);
      swap_cols(a, piv, k);
      swap_rows(m, piv, k);
    }

    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / a(k, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        m(r, c) -= f * m(k, c);
      }
      for (std::size_t i = 0; i < n; ++i) a(i, r) -= f * a(i, k);
    }
  }

  RationalDiagonalization out{inverse(m), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.d[i] = a(i, i);
  return out;
}

Inertia count_signs(const std::vector<Rational>& d) {
  Inertia in;
  for (const auto& v : d) {
    int s = sign(v);
    if (s > 0) ++in.positive;
    else if (s < 0) ++in.negative;
    else ++in.zero;
  }
  return in;
}

}  // namespace

Inertia inertia(const SymMatrix& q) { return count_signs(diagonalize(q).d); }

Inertia inertia(const Decomposition& dec) {
  std::vector<Rational> d(dec.d.begin(), dec.d.end());
  return count_signs(d);
}

Decomposition decompose(const SymMatrix& q) {
  RationalDiagonalization rd = diagonalize(q);
  const std::size_t n = q.size();

  Integer c = 1;
  auto absorb = [&c](const Rational& v) { mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), v.get_den_mpz_t()); };
  for (std::size_t i = 0; i < n; ++i) {
    absorb(rd.d[i]);
    for (std::size_t j = 0; j < n; ++j) absorb(rd.s(i, j));
  }

  Decomposition dec{IntMatrix(n, n), std::vector<Integer>(n), c};
  for (std::size_t i = 0; i < n; ++i) {
    dec.d[i] = Rational(rd.d[i] * c).get_num();
    for (std::size_t j = 0; j < n; ++j) dec.s(i, j) = Rational(rd.s(i, j) * c).get_num();
  }
  if (!reconstructs(dec, q)) throw std::logic_error("decomposition failed exact verification");
  return dec;
}

bool reconstructs(const Decomposition& dec, const SymMatrix& q) {
  const std::size_t n = q.size();
  if (dec.s.rows() != n || dec.s.cols() != n || dec.d.size() != n) return false;
  IntMatrix sd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sd(i, j) = dec.s(i, j) * dec.d[j];
  IntMatrix product = multiply(sd, transpose(dec.s));
  Integer c3 = dec.c * dec.c * dec.c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (product(i, j) != c3 * q(i, j)) return false;
  return true;
}

Decomposition reorder_for_one_negative(Decomposition dec) {
  const std::size_t n = dec.size();
  std::size_t negative = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (dec.d[i] < 0) {
      if (negative != n) throw std::invalid_argument("decomposition has two or more negative entries");
      negative = i;
    }
  }
  if (negative == n || negative == n - 1) return dec;
  std::swap(dec.d[negative], dec.d[n - 1]);
  for (std::size_t r = 0; r < n; ++r) std::swap(dec.s(r, negative), dec.s(r, n - 1));
  return dec;
}

}  // namespace sliceopt
