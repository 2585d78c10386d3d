#include "qssr/matrix.hpp"

#include <stdexcept>

#include "qssr/errors.hpp"

namespace qssr {

RfMatrix::RfMatrix(int rows, int cols, SymTab table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
  entries_.assign(static_cast<std::size_t>(rows) * cols, RationalFunction(Polynomial(table_)));
}

RfMatrix RfMatrix::identity(int n, SymTab table) {
  RfMatrix m(n, n, table);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction::constant(table, Rat(1));
  return m;
}

RfMatrix RfMatrix::from_polys(int rows, int cols, const std::vector<Polynomial>& entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("entry count does not match dimensions");
  RfMatrix m(rows, cols, entries.front().table());
  for (int i = 0; i < rows * cols; ++i) m.entries_[i] = RationalFunction(entries[i]);
  return m;
}

RfMatrix RfMatrix::operator*(const RfMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RfMatrix out(rows_, other.cols_, table_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      RationalFunction s{Polynomial(table_)};
      for (int k = 0; k < cols_; ++k) s += at(i, k) * other.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

RfMatrix RfMatrix::operator+(const RfMatrix& other) const {
  RfMatrix out = *this;
  for (int i = 0; i < rows_ * cols_; ++i) out.entries_[i] += other.entries_[i];
  return out;
}

RfMatrix RfMatrix::operator-(const RfMatrix& other) const {
  RfMatrix out = *this;
  for (int i = 0; i < rows_ * cols_; ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

std::vector<RationalFunction> RfMatrix::apply(const std::vector<RationalFunction>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
  std::vector<RationalFunction> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    RationalFunction s{Polynomial(table_)};
    for (int k = 0; k < cols_; ++k) s += at(i, k) * v[k];
    out.push_back(s);
  }
  return out;
}

bool RfMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Polynomial bareiss_determinant(const std::vector<Polynomial>& entries, int n) {
  if (n == 0) throw std::invalid_argument("empty determinant");
  std::vector<Polynomial> a = entries;
  SymTab table = a.front().table();
  Polynomial prev = Polynomial::constant(table, Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r * n + k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Polynomial(table);  // zero column below, det == 0
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        Polynomial q;
        if (!exact_divide(num, prev, &q))
          throw std::logic_error("Bareiss division not exact");
        a[i * n + j] = q;
      }
    prev = a[k * n + k];
  }
  Polynomial det = a[(n - 1) * n + (n - 1)];
  return sign < 0 ? -det : det;
}

namespace {

// Clears denominators row by row; returns polynomial entries and the product
// of the row multipliers so that det(M) = det(P)/product.
void clear_denominators(const RfMatrix& m, std::vector<Polynomial>* out, Polynomial* factor,
                        const std::vector<int>& rows, const std::vector<int>& cols) {
  SymTab table = m.table();
  *factor = Polynomial::constant(table, Rat(1));
  out->clear();
  out->reserve(rows.size() * cols.size());
  for (int r : rows) {
    Polynomial row_den = Polynomial::constant(table, Rat(1));
    for (int c : cols) row_den *= m.at(r, c).den();
    *factor *= row_den;
    for (int c : cols) {
      Polynomial q;
      if (!exact_divide(row_den, m.at(r, c).den(), &q)) throw std::logic_error("denominator clearing failed");
      out->push_back(m.at(r, c).num() * q);
    }
  }
}

RationalFunction minor_det(const RfMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<Polynomial> cleared;
  Polynomial factor;
  clear_denominators(m, &cleared, &factor, rows, cols);
  Polynomial det = bareiss_determinant(cleared, static_cast<int>(rows.size()));
  return RationalFunction(std::move(det), std::move(factor));
}

void subsets(int n, int k, std::vector<std::vector<int>>* out) {
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out->push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

}  // namespace

RationalFunction RfMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<int> all(rows_);
  for (int i = 0; i < rows_; ++i) all[i] = i;
  return minor_det(*this, all, all);
}

std::vector<RationalFunction> RfMatrix::minors(int k) const {
  if (k < 1 || k > rows_ || k > cols_) throw std::invalid_argument("minor size out of range");
  std::vector<std::vector<int>> row_sets, col_sets;
  subsets(rows_, k, &row_sets);
  subsets(cols_, k, &col_sets);
  std::vector<RationalFunction> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(minor_det(*this, rs, cs));
  return out;
}

RfMatrix RfMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RationalFunction det = determinant();
  if (det.is_zero()) throw SingularMatrixError("matrix is symbolically singular");
  int n = rows_;
  RfMatrix out(n, n, table_);
  if (n == 1) {
    out.at(0, 0) = RationalFunction(Polynomial::constant(table_, Rat(1))) / at(0, 0);
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> rs, cs;
      for (int r = 0; r < n; ++r)
        if (r != i) rs.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cs.push_back(c);
      RationalFunction cof = minor_det(*this, rs, cs);
      if ((i + j) % 2 != 0) cof = -cof;
      out.at(j, i) = cof / det;  // adjugate transposes
    }
  }
  return out;
}

int RfMatrix::generic_rank() const {
  RfMatrix a = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols_; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    for (int r = rank + 1; r < rows_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      RationalFunction f = a.at(r, col) / a.at(rank, col);
      for (int c = col; c < cols_; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

int RfMatrix::rank_at_point(const std::vector<Rat>& point) const {
  std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c).evaluate(point);
  return rational_rank(std::move(m));
}

int rational_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

RfMatrix jacobian(const std::vector<Polynomial>& F, const std::vector<int>& vars) {
  if (vars.empty()) throw std::invalid_argument("jacobian needs a nonempty variable list");
  RfMatrix out(static_cast<int>(F.size()), static_cast<int>(vars.size()), F.front().table());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = RationalFunction(F[i].derivative(vars[j]));
  return out;
}

}  // namespace qssr
