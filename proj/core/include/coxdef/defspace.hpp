// Deformation charts of the quadrilateral prism orbifold D^2(;n12,n23,n34,n14) x R
// and of Coxeter n-simplices.
//
// All charts fix alpha_j = e_j^* for the first sides and normalize the
// remaining gauge freedom, so a chart point determines a reflection system
// up to nothing (general, simplex) or up to the one-parameter action on the
// fourth coordinates of alpha_4 and v_4 (concurrent, standard).

#ifndef COXDEF_DEFSPACE_HPP_
#define COXDEF_DEFSPACE_HPP_

#include "coxdef/coxeter.hpp"
#include "coxdef/projlin.hpp"
#include "coxdef/vinberg.hpp"

#include <array>
#include <map>
#include <string>

namespace coxdef {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularSystem : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConditionFailure : std::domain_error {
  using std::domain_error::domain_error;
};
struct GaugeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Linear functionals independent. Coordinates
// {T13 >= 4} x {v23 < 0} x {v24 < 0} x {v34 < 0} x {T24 >= 4}.
struct GeneralChartParams {
  static constexpr int kParameterCount = 5;
  static constexpr int kClosedHalfLines = 2;  // T13, T24

  QuadPrismOrders orders;
  double t13 = 4.0;
  double t24 = 4.0;
  double v23 = -1.0;
  double v24 = -1.0;
  double v34 = -1.0;

  void validate() const;
};

// alpha_4 = e1* - e2* + e3*. v44 is the free fourth coordinate of v_4;
// the semisimple slice is v44 = 0 and has coordinates
// {v12 < 0} x {v23 < 0} x {v14 < 0} x {v34 < 0}.
struct ConcurrentChartParams {
  static constexpr int kParameterCount = 4;
  static constexpr int kClosedHalfLines = 0;

  QuadPrismOrders orders;
  double v12 = -1.0;
  double v23 = -1.0;
  double v14 = -1.0;
  double v34 = -1.0;
  double v44 = 0.0;

  void validate() const;
};

// Gauge-fixed coordinates shared by both cases: alpha_j = e_j^* (j <= 3),
// v_1 = (2,-1,-1,0), v_4 = (-1, v24, v34, v44), M14 = -1.
struct StandardCoordinates {
  double t13 = 4.0;
  double t24 = 4.0;
  double v23 = -1.0;
  double v24 = -1.0;
  double v34 = -1.0;
};

struct StandardChartPoint {
  static constexpr int kParameterCount = 5;
  static constexpr int kClosedHalfLines = 2;

  QuadPrismOrders orders;
  StandardCoordinates coords;
  // alpha_4 = (a1, a2, a3, a4); only the product a4 v44 is gauge invariant
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4v44 = 0.0;

  // Cartan matrix of any realization (M44 = 2).
  CartanMatrix cartan() const;
  // concurrent-type point: a4 v44 vanishes and (a1, a2, a3) has sign pattern (+, -, +)
  bool admits_concurrent(double tol = 1e-10) const;
};

// Upper-triangle entries v_ij, 1 <= i < j <= n (0-based), of an n-simplex chart;
// first row and column are fixed by the normalization.
struct SimplexChartParams {
  std::size_t n = 3;
  EdgeOrders orders{4};
  std::map<IndexPair, double> free_entries;

  // n(n-1)/2 when every order is >= 3; pairs of order 2 carry no parameter
  std::size_t parameter_count() const;
  void validate() const;
  static std::size_t expected_parameter_count(std::size_t n) { return n * (n - 1) / 2; }
};

enum class CaseLabel { I, IPrime, II, III };

std::string to_string(CaseLabel c);

ReflectionSystem build_general(const GeneralChartParams& p);
ReflectionSystem build_concurrent(const ConcurrentChartParams& p);
// Solves the 4x4 system for (a1, a2, a3, a4 v44) and validates the result.
StandardChartPoint build_standard(const QuadPrismOrders& orders, const StandardCoordinates& c,
                                  double tol = kTolAlg);
ReflectionSystem build_simplex(const SimplexChartParams& p);

// V = V_alpha (+) V_v, where V_alpha is the common kernel of the alphas and
// V_v the span of the v's.
bool is_semisimple(const ReflectionSystem& sys, double tol = 1e-9);

inline constexpr double kCaseZeroTol = 1e-10;
CaseLabel classify_case(double a4, double v44, double tol = kCaseZeroTol);

// Representative of a standard-chart point with the given a4. When a4 v44 is
// nonzero, v44 = a4v44 / a4 and a4 must be nonzero (GaugeError otherwise).
// When a4 v44 vanishes, v44 is 0 if a4 != 0 and free_v44 if a4 == 0.
ReflectionSystem realize_representation(const StandardChartPoint& pt, double a4,
                                        double free_v44 = 0.0, double tol = kCaseZeroTol);

// Reads standard coordinates off a Cartan matrix with the quad-prism sign
// pattern by conjugating with the positive diagonal that makes
// M21 = M31 = M14 = -1.
StandardCoordinates standard_coordinates(const CartanMatrix& m);
// D with D^{-1} M D normalized as above (c1 = 1)
std::array<double, 4> standard_gauge(const CartanMatrix& m);

// det of the upper-left 3x3 Cartan block
double leading_det3(const CartanMatrix& m);

}  // namespace coxdef

#endif  // COXDEF_DEFSPACE_HPP_
