// Small dense real linear algebra for reflection systems.
//
// Dimensions are runtime values capped at kMaxDim (n+1 for an n-simplex,
// 4 for the quadrilateral prism). Storage is inline, so every type here is
// a cheap value type.

#ifndef COXDEF_PROJLIN_HPP_
#define COXDEF_PROJLIN_HPP_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxdef {

inline constexpr std::size_t kMaxDim = 9;

// algebraic identities (alpha(v) = 2, Cartan products)
inline constexpr double kTolAlg = 1e-9;
// |det| below this is treated as singular by inverse/solve
inline constexpr double kTolSing = 1e-12;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonFiniteValue : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NormalizationError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

// Fixed-capacity list of doubles shared by Vec and Covec.
class Entries {
public:
  Entries() = default;
  explicit Entries(std::size_t dim);
  Entries(std::initializer_list<double> values);
  explicit Entries(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  double operator[](std::size_t i) const { return data_[i]; }
  std::span<const double> values() const { return {data_.data(), dim_}; }

protected:
  void set(std::size_t i, double x);
  std::array<double, kMaxDim> data_{};
  std::size_t dim_ = 0;
};

}  // namespace detail

// Column vector in V = R^d.
class Vec : public detail::Entries {
public:
  using Entries::Entries;
  static Vec basis(std::size_t dim, std::size_t i);
  Vec with(std::size_t i, double x) const;
  friend bool operator==(const Vec& a, const Vec& b);
};

// Linear functional on V, i.e. an element of V*.
class Covec : public detail::Entries {
public:
  using Entries::Entries;
  static Covec basis(std::size_t dim, std::size_t i);
  Covec with(std::size_t i, double x) const;
  friend bool operator==(const Covec& a, const Covec& b);
};

// Square d x d matrix, row-major.
class Mat {
public:
  Mat() = default;
  // zero matrix
  explicit Mat(std::size_t dim);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t dim);
  static Mat diagonal(std::span<const double> diag);
  static Mat from_columns(std::span<const Vec> columns);
  static Mat from_rows(std::span<const Covec> rows);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxDim + c]; }
  Mat with(std::size_t r, std::size_t c, double x) const;

  Vec column(std::size_t c) const;
  Covec row(std::size_t r) const;
  Mat transpose() const;
  // upper-left k x k block
  Mat leading_block(std::size_t k) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& m, const Vec& x);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(double s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b);

private:
  void set(std::size_t r, std::size_t c, double x);
  std::array<double, kMaxDim * kMaxDim> data_{};
  std::size_t dim_ = 0;
};

// a(x) = sum_i a_i x_i
double pair(const Covec& a, const Vec& x);

// v a^T as a matrix
Mat outer(const Vec& v, const Covec& a);

// |a(v) - 2| <= tol (1 + sum_i |a_i v_i|): cancellation in a(v) grows with the terms
bool is_normalized(const Covec& a, const Vec& v, double tol = kTolAlg);

// The projective reflection Id - a (x) v. Requires is_normalized(a, v).
Mat reflection(const Covec& a, const Vec& v);

// m^k by repeated squaring; k >= 1.
Mat mat_power(const Mat& m, unsigned k);

double frobenius_norm(const Mat& m);
double norm(const Vec& x);

double det(const Mat& m);
Mat inverse(const Mat& m);
// Gaussian elimination with partial pivoting; pivots with |p| <= tol count as zero.
std::size_t rank(const Mat& m, double tol = 1e-9);
// Rank of an arbitrary list of vectors (rows x dim), same elimination.
std::size_t rank_of(std::span<const Vec> vectors, double tol = 1e-9);
Vec solve(const Mat& m, const Vec& b);

// Basis of {x : a(x) = 0 for every a in covecs}.
std::vector<Vec> common_kernel(std::span<const Covec> covecs, std::size_t dim, double tol = 1e-9);
// Basis of {c in R^f : sum_i c_i covecs[i] = 0}, f = covecs.size() <= kMaxDim.
std::vector<Vec> linear_relations(std::span<const Covec> covecs, double tol = 1e-9);

std::string to_string(const Mat& m);

}  // namespace coxdef

#endif  // COXDEF_PROJLIN_HPP_
