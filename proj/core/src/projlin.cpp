#include "coxdef/projlin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace coxdef {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim)
    throw DimensionMismatch("dimension must be in 1.." + std::to_string(kMaxDim) +
                            ", got " + std::to_string(dim));
}

void check_finite(double x) {
  if (!std::isfinite(x))
    throw NonFiniteValue("non-finite entry");
}

using Rows = std::vector<std::vector<double>>;

// In-place reduced row echelon form. Returns pivot columns.
std::vector<std::size_t> rref(Rows& a, std::size_t ncols, double tol) {
  double scale = 1.0;
  for (const auto& row : a)
    for (double x : row)
      scale = std::max(scale, std::abs(x));
  const double eps = tol * scale;

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < a.size(); ++i)
      if (std::abs(a[i][c]) > std::abs(a[best][c]))
        best = i;
    if (std::abs(a[best][c]) <= eps)
      continue;
    std::swap(a[r], a[best]);
    // pivots come from the first ncols columns; row operations span augmented columns too
    const double p = a[r][c];
    for (double& x : a[r])
      x /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0.0)
        continue;
      const double f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vec> null_space(Rows a, std::size_t ncols, double tol) {
  const auto pivots = rref(a, ncols, tol);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<double> x(ncols, 0.0);
    x[free] = 1.0;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      x[pivots[k]] = -a[k][free];
    basis.emplace_back(std::span<const double>(x));
  }
  return basis;
}

}  // namespace

namespace detail {

Entries::Entries(std::size_t dim) : dim_(dim) { check_dim(dim); }

Entries::Entries(std::initializer_list<double> values) : dim_(values.size()) {
  check_dim(dim_);
  std::size_t i = 0;
  for (double x : values)
    set(i++, x);
}

Entries::Entries(std::span<const double> values) : dim_(values.size()) {
  check_dim(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    set(i, values[i]);
}

void Entries::set(std::size_t i, double x) {
  check_finite(x);
  data_[i] = x;
}

}  // namespace detail

Vec Vec::basis(std::size_t dim, std::size_t i) {
  Vec e(dim);
  e.set(i, 1.0);
  return e;
}

Vec Vec::with(std::size_t i, double x) const {
  Vec r = *this;
  r.set(i, x);
  return r;
}

bool operator==(const Vec& a, const Vec& b) {
  return std::ranges::equal(a.values(), b.values());
}

Covec Covec::basis(std::size_t dim, std::size_t i) {
  Covec e(dim);
  e.set(i, 1.0);
  return e;
}

Covec Covec::with(std::size_t i, double x) const {
  Covec r = *this;
  r.set(i, x);
  return r;
}

bool operator==(const Covec& a, const Covec& b) {
  return std::ranges::equal(a.values(), b.values());
}

Mat::Mat(std::size_t dim) : dim_(dim) { check_dim(dim); }

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) : dim_(rows.size()) {
  check_dim(dim_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_)
      throw DimensionMismatch("matrix rows must all have length " + std::to_string(dim_));
    std::size_t c = 0;
    for (double x : row)
      set(r, c++, x);
    ++r;
  }
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m.set(i, i, 1.0);
  return m;
}

Mat Mat::diagonal(std::span<const double> diag) {
  Mat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m.set(i, i, diag[i]);
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  Mat m(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.dim_)
      throw DimensionMismatch("from_columns: column count must equal vector dimension");
    for (std::size_t r = 0; r < m.dim_; ++r)
      m.set(r, c, columns[c][r]);
  }
  return m;
}

Mat Mat::from_rows(std::span<const Covec> rows) {
  Mat m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.dim_)
      throw DimensionMismatch("from_rows: row count must equal covector dimension");
    for (std::size_t c = 0; c < m.dim_; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

void Mat::set(std::size_t r, std::size_t c, double x) {
  check_finite(x);
  data_[r * kMaxDim + c] = x;
}

Mat Mat::with(std::size_t r, std::size_t c, double x) const {
  Mat m = *this;
  m.set(r, c, x);
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    v = v.with(r, (*this)(r, c));
  return v;
}

Covec Mat::row(std::size_t r) const {
  return Covec(std::span<const double>(&data_[r * kMaxDim], dim_));
}

Mat Mat::transpose() const {
  Mat t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      t.data_[c * kMaxDim + r] = data_[r * kMaxDim + c];
  return t;
}

Mat Mat::leading_block(std::size_t k) const {
  if (k > dim_)
    throw DimensionMismatch("leading_block larger than matrix");
  Mat b(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      b.data_[r * kMaxDim + c] = data_[r * kMaxDim + c];
  return b;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim_ != b.dim_)
    throw DimensionMismatch("matrix product dimension mismatch");
  Mat p(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const double x = a(r, k);
      if (x == 0.0)
        continue;
      for (std::size_t c = 0; c < a.dim_; ++c)
        p.data_[r * kMaxDim + c] += x * b(k, c);
    }
  return p;
}

Vec operator*(const Mat& m, const Vec& x) {
  if (m.dim() != x.dim())
    throw DimensionMismatch("matrix-vector dimension mismatch");
  std::array<double, kMaxDim> y{};
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      y[r] += m(r, c) * x[c];
  return Vec(std::span<const double>(y.data(), m.dim()));
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.dim_ != b.dim_)
    throw DimensionMismatch("matrix sum dimension mismatch");
  Mat s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i)
    s.data_[i] += b.data_[i];
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  return a + (-1.0) * b;
}

Mat operator*(double s, const Mat& m) {
  Mat r = m;
  for (double& x : r.data_)
    x *= s;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.dim_ == b.dim_ && a.data_ == b.data_;
}

double pair(const Covec& a, const Vec& x) {
  if (a.dim() != x.dim())
    throw DimensionMismatch("pair: covector of dimension " + std::to_string(a.dim()) +
                            " applied to vector of dimension " + std::to_string(x.dim()));
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += a[i] * x[i];
  return s;
}

Mat outer(const Vec& v, const Covec& a) {
  if (a.dim() != v.dim())
    throw DimensionMismatch("outer: dimension mismatch");
  Mat m(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c)
      m = m.with(r, c, v[r] * a[c]);
  return m;
}

bool is_normalized(const Covec& a, const Vec& v, double tol) {
  double scale = 0.0;
  for (std::size_t i = 0; i < a.dim() && i < v.dim(); ++i)
    scale += std::abs(a[i] * v[i]);
  return std::abs(pair(a, v) - 2.0) <= tol * (1.0 + scale);
}

Mat reflection(const Covec& a, const Vec& v) {
  if (!is_normalized(a, v)) {
    std::ostringstream msg;
    msg << "reflection requires alpha(v) = 2, got " << pair(a, v);
    throw NormalizationError(msg.str());
  }
  return Mat::identity(v.dim()) - outer(v, a);
}

Mat mat_power(const Mat& m, unsigned k) {
  if (k == 0)
    throw std::invalid_argument("mat_power: exponent must be positive");
  Mat result = Mat::identity(m.dim());
  Mat base = m;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1u;
    if (k > 0)
      base = base * base;
  }
  return result;
}

double frobenius_norm(const Mat& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      s += m(r, c) * m(r, c);
  return std::sqrt(s);
}

double norm(const Vec& x) {
  double s = 0.0;
  for (double xi : x.values())
    s += xi * xi;
  return std::sqrt(s);
}

double det(const Mat& m) {
  const std::size_t n = m.dim();
  std::array<double, kMaxDim * kMaxDim> a{};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a[r * n + c] = m(r, c);
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[best * n + c]))
        best = r;
    if (a[best * n + c] == 0.0)
      return 0.0;
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[c * n + j], a[best * n + j]);
      d = -d;
    }
    const double p = a[c * n + c];
    d *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / p;
      for (std::size_t j = c; j < n; ++j)
        a[r * n + j] -= f * a[c * n + j];
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (std::abs(det(m)) <= kTolSing)
    throw SingularMatrix("inverse of a singular matrix");
  const std::size_t n = m.dim();
  Rows a(n, std::vector<double>(2 * n, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c);
    a[r][n + r] = 1.0;
  }
  rref(a, n, 0.0);
  Mat inv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv = inv.with(r, c, a[r][n + c]);
  return inv;
}

std::size_t rank(const Mat& m, double tol) {
  Rows a(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      a[r][c] = m(r, c);
  return rref(a, m.dim(), tol).size();
}

std::size_t rank_of(std::span<const Vec> vectors, double tol) {
  if (vectors.empty())
    return 0;
  const std::size_t n = vectors.front().dim();
  Rows a;
  for (const auto& v : vectors) {
    if (v.dim() != n)
      throw DimensionMismatch("rank_of: vectors of different dimensions");
    a.emplace_back(v.values().begin(), v.values().end());
  }
  return rref(a, n, tol).size();
}

Vec solve(const Mat& m, const Vec& b) {
  if (m.dim() != b.dim())
    throw DimensionMismatch("solve: dimension mismatch");
  if (std::abs(det(m)) <= kTolSing)
    throw SingularMatrix("solve with a singular matrix");
  const std::size_t n = m.dim();
  Rows a(n, std::vector<double>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c);
    a[r][n] = b[r];
  }
  rref(a, n, 0.0);
  std::array<double, kMaxDim> x{};
  for (std::size_t r = 0; r < n; ++r)
    x[r] = a[r][n];
  return Vec(std::span<const double>(x.data(), n));
}

std::vector<Vec> common_kernel(std::span<const Covec> covecs, std::size_t dim, double tol) {
  check_dim(dim);
  Rows a;
  for (const auto& c : covecs) {
    if (c.dim() != dim)
      throw DimensionMismatch("common_kernel: covector dimension mismatch");
    a.emplace_back(c.values().begin(), c.values().end());
  }
  if (a.empty())
    a.emplace_back(dim, 0.0);
  return null_space(std::move(a), dim, tol);
}

std::vector<Vec> linear_relations(std::span<const Covec> covecs, double tol) {
  const std::size_t f = covecs.size();
  check_dim(f);
  const std::size_t d = covecs.front().dim();
  // columns are the covectors
  Rows a(d, std::vector<double>(f));
  for (std::size_t j = 0; j < f; ++j) {
    if (covecs[j].dim() != d)
      throw DimensionMismatch("linear_relations: covector dimension mismatch");
    for (std::size_t i = 0; i < d; ++i)
      a[i][j] = covecs[j][i];
  }
  return null_space(std::move(a), f, tol);
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.dim(); ++c)
      os << (c ? ", " : "") << m(r, c);
  }
  os << ']';
  return os.str();
}

}  // namespace coxdef
