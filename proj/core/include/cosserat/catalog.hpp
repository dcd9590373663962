#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosserat/classification.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/quaternion.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

enum class GlobalFlag { none, global_min, global_max };
enum class FamilyKind { isolated, circle, two_sphere };

const char* to_string(GlobalFlag f);
const char* to_string(FamilyKind k);

/// Parameterization of a continuous critical set on S^3.
///  - circle:      q(alpha) = base + radius (cos(alpha) e_c + sin(alpha) e_s)
///  - two_sphere:  q(s) = (q0, rho s), s in S^2
struct Family {
  FamilyKind kind = FamilyKind::isolated;
  Vec4 base{};
  double radius = 0.0;
  int cos_axis = -1;
  int sin_axis = -1;
  double q0 = 0.0;
  double rho = 0.0;

  UnitQuaternion circle_point(double alpha) const;
  UnitQuaternion sphere_point(double theta, double phi) const;
};

struct CriticalPoint {
  std::string name;
  Rotation rotation;                        // representative rotation
  std::optional<UnitQuaternion> quaternion; // n = 3 lift of the representative
  Family family;
  double energy = 0.0;
  std::vector<double> spectrum;             // restricted-Hessian spectrum, increasing
  Label label = Label::degenerate;
  GlobalFlag global_flag = GlobalFlag::none;
};

enum class LambdaPattern { n2, distinct, first_pair_equal, last_pair_equal, all_equal };

const char* to_string(LambdaPattern p);

struct Catalog {
  int n = 0;
  std::vector<double> lambdas;              // possibly snapped onto the coincidence pattern
  LambdaPattern pattern = LambdaPattern::n2;
  std::vector<CriticalPoint> points;
  std::vector<std::string> boundary_notes;  // existence gates hit exactly at the boundary
  std::vector<std::string> warnings;        // e.g. near-coincident singular values
};

/// Critical points of the reduced planar cost for singular values l1 >= l2 > 0:
/// I, -I always; the two extra rotations with diagonal 2/(l1+l2) when l1+l2 > 2.
Catalog catalog_n2(double l1, double l2);

/// Critical points of the reduced cost on SO(3) for l1 >= l2 >= l3 > 0.
/// Dispatches on the coincidence pattern of the singular values; continuous
/// families carry their parameterization and a sampled representative.
Catalog catalog_n3(double l1, double l2, double l3);

/// Re-derives the global min/max flags from the per-subcase closed-form rules
/// and checks them against the catalog energies; throws std::logic_error on
/// any inconsistency (which would signal an implementation bug).
void global_extrema(Catalog& catalog);

struct FeasibilityReport {
  double product_lambda = 0.0;
  double required_value = 0.0;      // ((mu - mu_c)/mu)^n
  bool physically_consistent = false;
  std::string note;
};

/// Checks the product identity prod(lambda) = ((mu-mu_c)/mu)^n det F and the
/// isochoric (det F = 1) consistency of the singular values.
FeasibilityReport feasibility(std::span<const double> lambdas, const MaterialParams& p,
                              double det_f);

/// Worked deformations with closed-form singular values, for regression use:
/// simple shear (k = 1) and the two isochoric equi-biaxial stretches
/// (k = 2 and k = 1/2).
struct NamedExample {
  std::string description;
  Mat f;
  MaterialParams params;
  std::vector<double> expected_lambdas;
};

NamedExample shear_example(double k, const MaterialParams& p);
NamedExample equibiaxial_stretch_example(double k, const MaterialParams& p);
std::vector<NamedExample> named_examples();

}  // namespace cosserat
