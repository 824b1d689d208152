// Reflection systems, Cartan matrices and Vinberg's conditions (C1)-(C5),
// plus cyclic invariants and projective equivalence of Cartan matrices.

#ifndef COXDEF_VINBERG_HPP_
#define COXDEF_VINBERG_HPP_

#include "coxdef/coxeter.hpp"
#include "coxdef/projlin.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coxdef {

struct InvariantViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnsupportedShape : std::domain_error {
  using std::domain_error::domain_error;
};

// The tuple (alpha_1..alpha_f, v_1..v_f) defining reflections
// R_j = Id - alpha_j (x) v_j. Construction checks shapes, finiteness and
// alpha_i(v_i) = 2; the remaining conditions are left to check_vinberg so
// that invalid systems can still be represented and diagnosed.
class ReflectionSystem {
public:
  ReflectionSystem(std::vector<Covec> alphas, std::vector<Vec> vs);

  std::size_t size() const { return alphas_.size(); }
  std::size_t dim() const { return alphas_.front().dim(); }
  const Covec& alpha(std::size_t i) const { return alphas_[i]; }
  const Vec& v(std::size_t i) const { return vs_[i]; }
  std::span<const Covec> alphas() const { return alphas_; }
  std::span<const Vec> vs() const { return vs_; }

  Mat reflection(std::size_t i) const;
  // [v] with v_j as columns (square only when f = d)
  Mat v_matrix() const;
  // alpha_i(v_j), unvalidated
  Mat pairing_matrix() const;

  ReflectionSystem with_v(std::size_t j, const Vec& v) const;

private:
  std::vector<Covec> alphas_;
  std::vector<Vec> vs_;
};

// M_ij = alpha_i(v_j), validated: unit diagonal 2, off-diagonals <= 0 and
// the zero pattern symmetric, all within tol.
class CartanMatrix {
public:
  explicit CartanMatrix(const Mat& m, double tol = kTolAlg);

  std::size_t size() const { return m_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Mat& matrix() const { return m_; }
  // M_ij M_ji
  double product(std::size_t i, std::size_t j) const { return m_(i, j) * m_(j, i); }
  // D M D^{-1}
  CartanMatrix conjugated(std::span<const double> diag) const;

private:
  Mat m_;
};

CartanMatrix cartan_of(const ReflectionSystem& sys);

struct ConditionResult {
  bool pass = true;
  double worst = 0.0;  // largest residual or violation observed
  std::vector<std::string> failures;

  void fail(std::string why);
};

struct VinbergReport {
  ConditionResult c1, c2, c3, c4, c5;
  // how nonempty interior was certified (or why it was not)
  std::string c5_certificate;

  bool all_pass() const { return c1.pass && c2.pass && c3.pass && c4.pass && c5.pass; }
};

// Evaluates (C1)-(C4) on the pairing matrix. (C5) is certified through the
// linear relations among the alphas: independent alphas pass outright; a
// single relation on the quadrilateral-prism diagram must have the
// concurrent sign pattern alpha_4 = d1 alpha_1 - d2 alpha_2 + d3 alpha_3
// with d_i > 0; otherwise the relation may not be a non-negative row relation.
VinbergReport check_vinberg(const ReflectionSystem& sys, const EdgeOrders& orders,
                            double tol = kTolAlg);

// True iff no nonzero relation among the alphas has only non-negative
// coefficients (such relations are automatically row relations of M).
// Throws UnsupportedShape when the relation space has dimension > 1.
bool relation_space_trivial(std::span<const Covec> alphas, const CartanMatrix& m,
                            double tol = kTolAlg);

// Index cycle (i_1, ..., i_k) of distinct 0-based indices, stored as the
// rotation starting at its smallest index. Reversal is a different cycle.
using Cycle = std::vector<std::size_t>;

Cycle canonical_cycle(Cycle c);
Cycle reversed_cycle(const Cycle& c);
// 1-based label such as "(1,3,2)"
std::string cycle_label(const Cycle& c);

// Values M_{i1 i2} M_{i2 i3} ... M_{ik i1} for every cycle of length 2..max_length.
class CyclicInvariants {
public:
  double at(const Cycle& c) const;
  bool contains(const Cycle& c) const;
  const std::map<Cycle, double>& values() const { return values_; }

  void insert(const Cycle& c, double value);

private:
  std::map<Cycle, double> values_;
};

double cyclic_product(const Mat& m, const Cycle& c);
CyclicInvariants cyclic_invariants(const CartanMatrix& m, std::size_t max_length = 4);

struct IdentityResidual {
  std::string name;  // the cycle on the left-hand side
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| / (1 + |lhs| + |rhs|)
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityResidual> residuals;
  bool all_pass() const;
  double worst() const;
};

// The eleven relations expressing every cyclic invariant of the quadrilateral
// prism through (1,3), (2,4), (1,2,3), (1,2,4), (1,3,4).
IdentityReport derived_invariant_identities(const CyclicInvariants& inv,
                                            const QuadPrismOrders& orders, double tol = 1e-9);

// |x - y| <= tol (1 + |x| + |y|)
bool relative_close(double x, double y, double tol);

// Equal cyclic invariants, i.e. m2 = D m1 D^{-1} with D positive diagonal.
// For f = 4 only the five generating invariants are compared.
bool projectively_equivalent(const CartanMatrix& m1, const CartanMatrix& m2, double tol = 1e-9);

}  // namespace coxdef

#endif  // COXDEF_VINBERG_HPP_
