// Coxeter-relation verification, determinant-locus checks and the
// convex-cocompactness decision for the quadrilateral prism.

#ifndef COXDEF_CERTIFY_HPP_
#define COXDEF_CERTIFY_HPP_

#include "coxdef/coxeter.hpp"
#include "coxdef/defspace.hpp"
#include "coxdef/vinberg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxdef {

struct WrongDiagram : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// (R_i R_j)^n accumulates rounding roughly like n eps |R|^2
inline constexpr double kTolRelation = 1e-7;

struct GeneratorCheck {
  std::size_t i = 0;
  double residual = 0.0;  // |R_i^2 - Id|_F
  bool pass = false;
};

struct PairCheck {
  IndexPair pair;
  Order order = Order::infinite();
  // finite: |(R_i R_j)^n - Id|_F. infinite: M_ij M_ji
  double value = 0.0;
  // infinite edges only: trace of R_i R_j on span{v_i, v_j}, M_ij M_ji - 2
  double plane_trace = 0.0;
  bool pass = false;
};

struct RelationReport {
  std::vector<GeneratorCheck> generators;
  std::vector<PairCheck> pairs;
  bool all_pass() const;
  double worst_finite_residual() const;
};

// Infinite pairs pass when R_i R_j has infinite order, i.e. its trace on
// span{v_i, v_j} is >= 2 (M_ij M_ji >= 4, up to kTolAlg).
RelationReport verify_relations(const ReflectionSystem& sys, const EdgeOrders& orders,
                                double tol = kTolRelation);

struct SliceStats {
  std::size_t samples = 0;
  double min_abs_det = 0.0;
  double min_e = 0.0;  // E = (4 - T13)(4 - T24) - det(M)
  StandardCoordinates argmin;
};

struct DetLocusReport {
  SliceStats t13_slice;  // T13 = 4
  SliceStats t24_slice;  // T24 = 4
  double threshold = 1e-6;
  bool pass() const;
};

// E = (4 - M13 M31)(4 - M24 M42) - det(M)
double det_defect(const CartanMatrix& m);

// Random standard-chart points on the T13 = 4 and T24 = 4 slices.
DetLocusReport det_locus_check(const QuadPrismOrders& orders, std::size_t samples,
                               std::uint64_t seed, double threshold = 1e-6);

// First T13 in (4, t_max] where det(M) changes sign along the ray with the
// other standard coordinates fixed; there a4 v44 = 0.
std::optional<double> det_root_on_t13_ray(const QuadPrismOrders& orders,
                                          const StandardCoordinates& base, double t_max = 1e6);

// T13 > 4 + tol and T24 > 4 + tol
bool is_convex_cocompact(const CartanMatrix& m, const QuadPrismOrders& orders, double tol = 0.0);
// Same, after checking the order table is the quadrilateral prism diagram.
bool is_convex_cocompact(const CartanMatrix& m, const EdgeOrders& orders, double tol = 0.0);

}  // namespace coxdef

#endif  // COXDEF_CERTIFY_HPP_
