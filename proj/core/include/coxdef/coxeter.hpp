// Edge orders of labeled polytopes and orbifold numerics.
//
// Indices are 0-based throughout the library; the conventional 1-based
// labels (n12, (1,3), ...) appear only in names and printed output.

#ifndef COXDEF_COXETER_HPP_
#define COXDEF_COXETER_HPP_

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxdef {

using Rational = boost::rational<std::int64_t>;

struct InfiniteOrder : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonHyperbolic : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidOrders : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dihedral order n_ij in {2, 3, ...} or infinity.
class Order {
public:
  static Order finite(int n);
  static Order infinite() { return Order(0); }

  bool is_infinite() const { return n_ == 0; }
  // throws InfiniteOrder
  int value() const;

  friend bool operator==(Order, Order) = default;
  std::string to_string() const;

private:
  explicit Order(int n) : n_(n) {}
  int n_;  // 0 encodes infinity
};

struct IndexPair {
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// 4 cos^2(pi/n): the value alpha_i(v_j) alpha_j(v_i) must take on a finite edge.
double mu(int n);
double mu(Order n);

// Symmetric table of edge orders on f sides. Pairs start out at order 2
// (commuting reflections) until set.
class EdgeOrders {
public:
  explicit EdgeOrders(std::size_t f);

  std::size_t size() const { return f_; }
  Order at(std::size_t i, std::size_t j) const;
  EdgeOrders& set(std::size_t i, std::size_t j, Order n);

private:
  std::size_t f_;
  std::vector<Order> orders_;
};

// Finite orders of D^2(;n12,n23,n34,n14) x R: the 4-sided diagram with
// n13 = n24 = infinity. All four finite orders are >= 3.
struct QuadPrismOrders {
  int n12 = 3;
  int n23 = 3;
  int n34 = 3;
  int n14 = 3;

  QuadPrismOrders() = default;
  QuadPrismOrders(int n12, int n23, int n34, int n14);

  EdgeOrders edge_orders() const;
  double mu12() const { return mu(n12); }
  double mu23() const { return mu(n23); }
  double mu34() const { return mu(n34); }
  double mu14() const { return mu(n14); }

  // Recovers the quad-prism orders from a general table; throws InvalidOrders
  // unless the pattern is exactly {13, 24} infinite and the rest finite >= 3.
  static QuadPrismOrders from(const EdgeOrders& orders);
};

std::vector<IndexPair> infinite_pairs(const EdgeOrders& orders);

// Data entering the Riemann-Hurwitz formula.
struct OrbifoldSignature {
  Rational chi_underlying{1};
  std::vector<int> cone_orders;
  std::vector<int> corner_orders;
  int full_boundary_count = 0;

  // Disk with the given corner reflector orders (a Coxeter polygon).
  static OrbifoldSignature polygon(std::vector<int> corner_orders);
  void validate() const;
};

Rational euler_characteristic(const OrbifoldSignature& sig);
// -3 chi(|O|) + 2k + l; throws NonHyperbolic unless chi(O) < 0.
int teichmuller_dim(const OrbifoldSignature& sig);
// teichmuller_dim minus the number of full boundary components.
int d_tp(const OrbifoldSignature& sig);
// -8 chi(|O|) + (6k - 2k_2) + (3l - l_2), for closed hyperbolic orbifolds.
int cg05_dim(const OrbifoldSignature& sig);

std::string to_string(const Rational& q);

}  // namespace coxdef

#endif  // COXDEF_COXETER_HPP_
