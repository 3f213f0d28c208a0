#include "apolar/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace apolar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols,
                                            std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw std::invalid_argument("stacked: column mismatch");
  RationalMatrix out(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<IntRow> rows;          // first `pivots.size()` rows are the echelon rows
  std::vector<std::size_t> pivots;   // pivot column of each echelon row
};

IntRow integer_row(const RationalMatrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
  IntRow out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(r, c);
    out[c] = q.get_num() * (l / q.get_den());
  }
  return out;
}

// Fraction-free forward elimination. After processing pivots
// (r1,c1)..(rk,ck), entry (i,j) below the pivots is the minor on rows
// {r1..rk,i} and columns {c1..ck,j}, so the division by the previous pivot
// is exact even when columns without pivots are skipped.
Echelon bareiss(const RationalMatrix& m) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(integer_row(m, r));
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && sgn(e.rows[p][c]) == 0) ++p;
    if (p == n_rows) continue;
    std::swap(e.rows[p], e.rows[r]);
    const mpz_class& piv = e.rows[r][c];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      IntRow& row = e.rows[i];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        mpz_class v = piv * row[j] - lead * e.rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[j] = std::move(v);
      }
      row[c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

// Back substitution through the echelon rows with the given values
// pre-assigned to the non-pivot unknowns.
RationalVector back_substitute(const Echelon& e, RationalVector x, std::size_t n_cols,
                               const IntRow* rhs_column_values = nullptr) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    Rational acc = rhs_column_values ? Rational((*rhs_column_values)[k]) : Rational(0);
    for (std::size_t j = pc + 1; j < n_cols; ++j)
      if (sgn(e.rows[k][j]) != 0 && sgn(x[j]) != 0) acc -= Rational(e.rows[k][j]) * x[j];
    x[pc] = acc / Rational(e.rows[k][pc]);
  }
  return x;
}

void make_primitive(RationalVector& v) {
  mpz_class l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  mpz_class g = 0;
  for (auto& q : v) {
    q *= l;
    g = gcd(g, q.get_num());
  }
  if (g == 0) return;
  int last_sign = 0;
  for (const auto& q : v)
    if (sgn(q) != 0) last_sign = sgn(q);
  if (last_sign < 0) g = -g;
  for (auto& q : v) q /= g;
}

}  // namespace

std::vector<RationalVector> kernel_exact(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<RationalVector> basis;
  if (m.rows() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n, Rational(0));
    x[f] = 1;
    x = back_substitute(e, std::move(x), n);
    make_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_exact(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m).pivots.size();
}

std::optional<RationalVector> solve_exact(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_exact: rhs size mismatch");
  const std::size_t n = m.cols();
  RationalMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = bareiss(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  IntRow rhs(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = e.rows[k][n];
  // The augmented column is excluded from the unknowns during substitution.
  for (auto& row : e.rows) row[n] = 0;
  return back_substitute(e, RationalVector(n, Rational(0)), n, &rhs);
}

std::size_t span_rank(const std::vector<RationalVector>& vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  RationalMatrix m(vectors.size(), length);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < length; ++c) m(r, c) = vectors[r][c];
  return rank_exact(m);
}

bool span_contains(const std::vector<RationalVector>& outer,
                   const std::vector<RationalVector>& inner, std::size_t length) {
  if (inner.empty()) return true;
  std::vector<RationalVector> all = outer;
  all.insert(all.end(), inner.begin(), inner.end());
  return span_rank(all, length) == span_rank(outer, length);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace apolar
