#include "coxdef/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coxdef {

Order Order::finite(int n) {
  if (n < 2)
    throw InvalidOrders("edge order must be >= 2, got " + std::to_string(n));
  return Order(n);
}

int Order::value() const {
  if (is_infinite())
    throw InfiniteOrder("edge order is infinite");
  return n_;
}

std::string Order::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(n_);
}

double mu(int n) {
  if (n < 2)
    throw InvalidOrders("edge order must be >= 2, got " + std::to_string(n));
  if (n == 2)
    return 0.0;
  const double c = std::cos(std::numbers::pi / n);
  return 4.0 * c * c;
}

double mu(Order n) {
  if (n.is_infinite())
    throw InfiniteOrder("mu is undefined on an infinite edge; use the product T >= 4");
  return mu(n.value());
}

EdgeOrders::EdgeOrders(std::size_t f) : f_(f), orders_(f * f, Order::finite(2)) {
  if (f < 2)
    throw InvalidOrders("need at least two sides");
}

Order EdgeOrders::at(std::size_t i, std::size_t j) const {
  if (i >= f_ || j >= f_ || i == j)
    throw std::out_of_range("edge order index out of range");
  return orders_[i * f_ + j];
}

EdgeOrders& EdgeOrders::set(std::size_t i, std::size_t j, Order n) {
  if (i >= f_ || j >= f_ || i == j)
    throw std::out_of_range("edge order index out of range");
  orders_[i * f_ + j] = n;
  orders_[j * f_ + i] = n;
  return *this;
}

QuadPrismOrders::QuadPrismOrders(int n12_, int n23_, int n34_, int n14_)
    : n12(n12_), n23(n23_), n34(n34_), n14(n14_) {
  for (int n : {n12, n23, n34, n14})
    if (n < 3)
      throw InvalidOrders("quadrilateral prism orders must be >= 3, got " + std::to_string(n));
}

EdgeOrders QuadPrismOrders::edge_orders() const {
  EdgeOrders e(4);
  e.set(0, 1, Order::finite(n12))
      .set(1, 2, Order::finite(n23))
      .set(2, 3, Order::finite(n34))
      .set(0, 3, Order::finite(n14))
      .set(0, 2, Order::infinite())
      .set(1, 3, Order::infinite());
  return e;
}

QuadPrismOrders QuadPrismOrders::from(const EdgeOrders& e) {
  if (e.size() != 4)
    throw InvalidOrders("quadrilateral prism needs 4 sides");
  if (!e.at(0, 2).is_infinite() || !e.at(1, 3).is_infinite())
    throw InvalidOrders("quadrilateral prism needs n13 = n24 = inf");
  for (auto [i, j] : {IndexPair{0, 1}, {1, 2}, {2, 3}, {0, 3}})
    if (e.at(i, j).is_infinite())
      throw InvalidOrders("quadrilateral prism needs finite n12, n23, n34, n14");
  return QuadPrismOrders(e.at(0, 1).value(), e.at(1, 2).value(), e.at(2, 3).value(),
                         e.at(0, 3).value());
}

std::vector<IndexPair> infinite_pairs(const EdgeOrders& orders) {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (orders.at(i, j).is_infinite())
        out.push_back({i, j});
  return out;
}

OrbifoldSignature OrbifoldSignature::polygon(std::vector<int> corner_orders) {
  OrbifoldSignature s;
  s.corner_orders = std::move(corner_orders);
  s.validate();
  return s;
}

void OrbifoldSignature::validate() const {
  auto bad = [](int q) { return q < 2; };
  if (std::ranges::any_of(cone_orders, bad) || std::ranges::any_of(corner_orders, bad))
    throw std::invalid_argument("cone and corner orders must be >= 2");
  if (full_boundary_count < 0)
    throw std::invalid_argument("boundary count must be non-negative");
}

Rational euler_characteristic(const OrbifoldSignature& sig) {
  sig.validate();
  Rational chi = sig.chi_underlying;
  for (int q : sig.cone_orders)
    chi -= Rational(1) - Rational(1, q);
  for (int r : sig.corner_orders)
    chi -= Rational(1, 2) * (Rational(1) - Rational(1, r));
  chi -= Rational(sig.full_boundary_count, 2);
  return chi;
}

namespace {

std::int64_t integral_chi(const OrbifoldSignature& sig) {
  if (sig.chi_underlying.denominator() != 1)
    throw std::invalid_argument("Euler characteristic of the underlying surface must be an integer");
  return sig.chi_underlying.numerator();
}

void require_hyperbolic(const OrbifoldSignature& sig) {
  const Rational chi = euler_characteristic(sig);
  if (chi >= 0)
    throw NonHyperbolic("orbifold Euler characteristic " + to_string(chi) + " is not negative");
}

}  // namespace

int teichmuller_dim(const OrbifoldSignature& sig) {
  require_hyperbolic(sig);
  const auto k = static_cast<std::int64_t>(sig.cone_orders.size());
  const auto l = static_cast<std::int64_t>(sig.corner_orders.size());
  return static_cast<int>(-3 * integral_chi(sig) + 2 * k + l);
}

int d_tp(const OrbifoldSignature& sig) {
  return teichmuller_dim(sig) - sig.full_boundary_count;
}

int cg05_dim(const OrbifoldSignature& sig) {
  require_hyperbolic(sig);
  if (sig.full_boundary_count != 0)
    throw std::invalid_argument("deformation dimension formula needs an orbifold without boundary");
  auto count = [](const std::vector<int>& v, int value) {
    return static_cast<std::int64_t>(std::ranges::count(v, value));
  };
  const auto k = static_cast<std::int64_t>(sig.cone_orders.size());
  const auto l = static_cast<std::int64_t>(sig.corner_orders.size());
  const auto k2 = count(sig.cone_orders, 2);
  const auto l2 = count(sig.corner_orders, 2);
  return static_cast<int>(-8 * integral_chi(sig) + (6 * k - 2 * k2) + (3 * l - l2));
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1)
    return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace coxdef
