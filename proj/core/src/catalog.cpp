#include "cosserat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cosserat/numerics.hpp"
#include "cosserat/son_geometry.hpp"

namespace cosserat {

const char* to_string(GlobalFlag f) {
  switch (f) {
    case GlobalFlag::none: return "none";
    case GlobalFlag::global_min: return "global_min";
    case GlobalFlag::global_max: return "global_max";
  }
  return "?";
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::isolated: return "isolated";
    case FamilyKind::circle: return "circle";
    case FamilyKind::two_sphere: return "two_sphere";
  }
  return "?";
}

const char* to_string(LambdaPattern p) {
  switch (p) {
    case LambdaPattern::n2: return "n2";
    case LambdaPattern::distinct: return "distinct";
    case LambdaPattern::first_pair_equal: return "lambda1_eq_lambda2";
    case LambdaPattern::last_pair_equal: return "lambda2_eq_lambda3";
    case LambdaPattern::all_equal: return "all_equal";
  }
  return "?";
}

UnitQuaternion Family::circle_point(double alpha) const {
  if (kind != FamilyKind::circle)
    throw std::logic_error("Family::circle_point: not a circle family");
  Vec4 q = base;
  q[static_cast<size_t>(cos_axis)] += radius * std::cos(alpha);
  q[static_cast<size_t>(sin_axis)] += radius * std::sin(alpha);
  return UnitQuaternion::normalized(q);
}

UnitQuaternion Family::sphere_point(double theta, double phi) const {
  if (kind != FamilyKind::two_sphere)
    throw std::logic_error("Family::sphere_point: not a two-sphere family");
  const double sx = std::sin(theta) * std::cos(phi);
  const double sy = std::sin(theta) * std::sin(phi);
  const double sz = std::cos(theta);
  return UnitQuaternion::normalized(Vec4{q0, rho * sx, rho * sy, rho * sz});
}

namespace {

double sq(double x) { return x * x; }

void sort_increasing(std::vector<double>& v) { std::sort(v.begin(), v.end()); }

// Existence gate "value > threshold" with the boundary treated as absent plus
// an explanatory note.
enum class Gate { present, boundary, absent };

Gate evaluate_gate(double value, double threshold, double scale) {
  const double tol = numerics().gate_tol * std::max(1.0, scale);
  if (std::fabs(value - threshold) <= tol) return Gate::boundary;
  return value > threshold ? Gate::present : Gate::absent;
}

CriticalPoint make_point_n3(std::string name, const UnitQuaternion& q, Family family,
                            double energy, std::vector<double> spectrum) {
  for (double& e : spectrum) e += 0.0;  // normalize signed zeros from boundary factors
  sort_increasing(spectrum);
  CriticalPoint p{std::move(name), quat_to_rotation(q), q, family, energy,
                  std::move(spectrum), Label::degenerate, GlobalFlag::none};
  p.label = classify(p.spectrum);
  return p;
}

Family isolated_family() { return Family{}; }

Family circle_family(Vec4 base, double radius, int cos_axis, int sin_axis) {
  Family f;
  f.kind = FamilyKind::circle;
  f.base = base;
  f.radius = radius;
  f.cos_axis = cos_axis;
  f.sin_axis = sin_axis;
  return f;
}

Family sphere_family(double q0, double rho) {
  Family f;
  f.kind = FamilyKind::two_sphere;
  f.q0 = q0;
  f.rho = rho;
  return f;
}

// The four axis quaternions e_0..e_3 (items always present for n = 3).
void add_axis_points(Catalog& c, double l1, double l2, double l3) {
  c.points.push_back(make_point_n3(
      "q^(0)", UnitQuaternion(1, 0, 0, 0), isolated_family(),
      sq(l1 - 1) + sq(l2 - 1) + sq(l3 - 1),
      {-4.0 * (l2 + l3) * (l2 + l3 - 2.0), -4.0 * (l1 + l3) * (l1 + l3 - 2.0),
       -4.0 * (l1 + l2) * (l1 + l2 - 2.0)}));
  c.points.push_back(make_point_n3(
      "q^(1)", UnitQuaternion(0, 1, 0, 0), isolated_family(),
      sq(l1 - 1) + sq(l2 + 1) + sq(l3 + 1),
      {-4.0 * (l2 + l3) * (l2 + l3 + 2.0), -4.0 * (l1 - l3) * (l1 - l3 - 2.0),
       -4.0 * (l1 - l2) * (l1 - l2 - 2.0)}));
  c.points.push_back(make_point_n3(
      "q^(2)", UnitQuaternion(0, 0, 1, 0), isolated_family(),
      sq(l1 + 1) + sq(l2 - 1) + sq(l3 + 1),
      {-4.0 * (l1 + l3) * (l1 + l3 + 2.0), -4.0 * (l1 - l2) * (l1 - l2 + 2.0),
       -4.0 * (l2 - l3) * (l2 - l3 - 2.0)}));
  c.points.push_back(make_point_n3(
      "q^(3)", UnitQuaternion(0, 0, 0, 1), isolated_family(),
      sq(l1 + 1) + sq(l2 + 1) + sq(l3 - 1),
      {-4.0 * (l1 + l2) * (l1 + l2 + 2.0), -4.0 * (l1 - l3) * (l1 - l3 + 2.0),
       -4.0 * (l2 - l3) * (l2 - l3 + 2.0)}));
}

struct MixedPointSpec {
  const char* base_name;
  int item;             // 4..9
  double gate;          // the combination compared against 2
  const char* gate_desc;
  const char* merge_target;
  int big_axis;         // slot of sqrt(1/2 + 1/gate)
  int small_axis;       // slot of sqrt(1/2 - 1/gate)
  double energy;
  double spec1, spec2;  // gate-independent eigenvalues
};

// Two rotation-distinct sign combinations per item: (+;+) and (+;-); the other
// two printed sign patterns are the antipodal lifts of the same rotations.
void add_mixed_pair(Catalog& c, const MixedPointSpec& s) {
  const double w = std::sqrt(0.5 + 1.0 / s.gate);
  const double v = std::sqrt(0.5 - 1.0 / s.gate);
  const double spec3 = 2.0 * sq(s.gate - 2.0) * (s.gate + 2.0) / s.gate;
  for (int sign = 0; sign < 2; ++sign) {
    Vec4 q{};
    q[static_cast<size_t>(s.big_axis)] = w;
    q[static_cast<size_t>(s.small_axis)] = (sign == 0) ? v : -v;
    const std::string name =
        std::string(s.base_name) + ((sign == 0) ? "_{+;+}" : "_{+;-}");
    c.points.push_back(make_point_n3(name, UnitQuaternion(q), isolated_family(), s.energy,
                                     {s.spec1, s.spec2, spec3}));
  }
}

void add_gated_mixed(Catalog& c, const MixedPointSpec& s, double scale) {
  switch (evaluate_gate(s.gate, 2.0, scale)) {
    case Gate::present:
      add_mixed_pair(c, s);
      break;
    case Gate::boundary: {
      std::ostringstream note;
      note << s.base_name << " at existence boundary " << s.gate_desc
           << " = 2; degenerates into " << s.merge_target;
      c.boundary_notes.push_back(note.str());
      break;
    }
    case Gate::absent:
      break;
  }
}

void build_distinct_items(Catalog& c, double l1, double l2, double l3, bool include_q4,
                          bool include_q6) {
  const double scale = l1;
  add_axis_points(c, l1, l2, l3);
  if (include_q4)
    add_gated_mixed(c, {"q^(4)", 4, l2 - l3, "lambda2 - lambda3", "q^(2)", 2, 3,
                        sq(l1 + 1) + 0.5 * sq(l2 + l3),
                        -4.0 * (l1 + l2) * (l1 + l3), -4.0 * (l1 - l2) * (l1 - l3)},
                    scale);
  add_gated_mixed(c, {"q^(5)", 5, l1 - l3, "lambda1 - lambda3", "q^(1)", 1, 3,
                      sq(l2 + 1) + 0.5 * sq(l1 + l3),
                      -4.0 * (l1 + l2) * (l2 + l3), 4.0 * (l1 - l2) * (l2 - l3)},
                  scale);
  if (include_q6)
    add_gated_mixed(c, {"q^(6)", 6, l1 - l2, "lambda1 - lambda2", "q^(1)", 1, 2,
                        sq(l3 + 1) + 0.5 * sq(l1 + l2),
                        -4.0 * (l1 + l3) * (l2 + l3), -4.0 * (l1 - l3) * (l2 - l3)},
                    scale);
  add_gated_mixed(c, {"q^(7)", 7, l1 + l2, "lambda1 + lambda2", "q^(0)", 0, 3,
                      sq(l3 - 1) + 0.5 * sq(l1 - l2),
                      4.0 * (l2 + l3) * (l1 - l3), 4.0 * (l1 + l3) * (l2 - l3)},
                  scale);
  add_gated_mixed(c, {"q^(8)", 8, l1 + l3, "lambda1 + lambda3", "q^(0)", 0, 2,
                      sq(l2 - 1) + 0.5 * sq(l1 - l3),
                      4.0 * (l2 + l3) * (l1 - l2), -4.0 * (l1 + l2) * (l2 - l3)},
                  scale);
  add_gated_mixed(c, {"q^(9)", 9, l2 + l3, "lambda2 + lambda3", "q^(0)", 0, 1,
                      sq(l1 - 1) + 0.5 * sq(l2 - l3),
                      -4.0 * (l1 + l2) * (l1 - l3), -4.0 * (l1 + l3) * (l1 - l2)},
                  scale);
}

void add_circle_point(Catalog& c, const char* name, Family family, double energy,
                      std::vector<double> spectrum) {
  c.points.push_back(
      make_point_n3(name, family.circle_point(0.0), family, energy, std::move(spectrum)));
}

// Gate for continuous families entering at "value >= 2": at the boundary they
// coincide with an already-listed set, so only a note is emitted.
bool circle_gate_open(Catalog& c, const char* name, double gate, const char* gate_desc,
                      const char* merge_target, double scale) {
  switch (evaluate_gate(gate, 2.0, scale)) {
    case Gate::present:
      return true;
    case Gate::boundary: {
      std::ostringstream note;
      note << name << " at existence boundary " << gate_desc << " = 2; degenerates into "
           << merge_target;
      c.boundary_notes.push_back(note.str());
      return false;
    }
    case Gate::absent:
      return false;
  }
  return false;
}

void build_first_pair_equal(Catalog& c, double l, double l3) {
  // lambda1 = lambda2 = l > lambda3: the distinct-case items minus q^(6),
  // plus the three circle families.
  build_distinct_items(c, l, l, l3, /*include_q4=*/true, /*include_q6=*/false);
  const double scale = std::max(1.0, l);

  add_circle_point(c, "q^(10)", circle_family(Vec4{0, 0, 0, 0}, 1.0, 1, 2),
                   2.0 * (l * l + 1.0) + sq(l3 + 1),
                   {0.0, -4.0 * (l + l3) * (l + l3 + 2.0),
                    -4.0 * (l - l3) * (l - l3 - 2.0)});

  const double g11 = l - l3;
  if (circle_gate_open(c, "q^(11)", g11, "lambda1 - lambda3", "q^(10)", scale)) {
    Family f = circle_family(Vec4{0, 0, 0, std::sqrt(0.5 - 1.0 / g11)},
                             std::sqrt(0.5 + 1.0 / g11), 1, 2);
    add_circle_point(c, "q^(11)", f, sq(l + 1) + 0.5 * sq(l + l3),
                     {0.0, -8.0 * l * (l + l3), 2.0 * (g11 + 2.0) * sq(g11 - 2.0) / g11});
  }

  const double g12 = l + l3;
  if (circle_gate_open(c, "q^(12)", g12, "lambda1 + lambda3", "q^(0)", scale)) {
    Family f = circle_family(Vec4{std::sqrt(0.5 + 1.0 / g12), 0, 0, 0},
                             std::sqrt(0.5 - 1.0 / g12), 1, 2);
    // third eigenvalue stored at the alpha = 0 representative; it varies with alpha
    add_circle_point(c, "q^(12)", f, sq(l - 1) + 0.5 * sq(l - l3),
                     {0.0, -8.0 * l * (l - l3),
                      2.0 * (g12 + 2.0) * (g12 - 2.0) * ((g12 - 2.0) + (g12 + 2.0)) / g12});
  }
}

void build_last_pair_equal(Catalog& c, double l1, double l) {
  // lambda1 > lambda2 = lambda3 = l: the distinct-case items minus q^(4),
  // plus the three circle families.
  build_distinct_items(c, l1, l, l, /*include_q4=*/false, /*include_q6=*/true);
  const double scale = std::max(1.0, l1);

  add_circle_point(c, "q^(13)", circle_family(Vec4{0, 0, 0, 0}, 1.0, 2, 3),
                   sq(l1 + 1) + 2.0 * (l * l + 1.0),
                   {0.0, -4.0 * (l1 + l) * (l1 + l + 2.0),
                    -4.0 * (l1 - l) * (l1 - l + 2.0)});

  const double g14 = l1 - l;
  if (circle_gate_open(c, "q^(14)", g14, "lambda1 - lambda2", "q^(1)", scale)) {
    Family f = circle_family(Vec4{0, std::sqrt(0.5 + 1.0 / g14), 0, 0},
                             std::sqrt(0.5 - 1.0 / g14), 2, 3);
    add_circle_point(c, "q^(14)", f, sq(l + 1) + 0.5 * sq(l1 + l),
                     {0.0, -8.0 * l * (l1 + l),
                      2.0 * (g14 + 2.0) * (g14 - 2.0) * ((g14 - 2.0) + (g14 + 2.0)) / g14});
  }

  const double g15 = l1 + l;
  if (circle_gate_open(c, "q^(15)", g15, "lambda1 + lambda2", "q^(0)", scale)) {
    Family f = circle_family(Vec4{std::sqrt(0.5 + 1.0 / g15), 0, 0, 0},
                             std::sqrt(0.5 - 1.0 / g15), 2, 3);
    add_circle_point(c, "q^(15)", f, sq(l - 1) + 0.5 * sq(l1 - l),
                     {0.0, 8.0 * l * (l1 - l),
                      2.0 * (g15 + 2.0) * (g15 - 2.0) * ((g15 - 2.0) + (g15 + 2.0)) / g15});
  }
}

constexpr double kHalfPi = 1.5707963267948966;

void build_all_equal(Catalog& c, double l) {
  c.points.push_back(make_point_n3("q^(0)", UnitQuaternion(1, 0, 0, 0), isolated_family(),
                                   3.0 * sq(l - 1),
                                   {-16.0 * l * (l - 1.0), -16.0 * l * (l - 1.0),
                                    -16.0 * l * (l - 1.0)}));

  {
    Family f = sphere_family(0.0, 1.0);
    const UnitQuaternion rep = f.sphere_point(kHalfPi, 0.0);  // (0,1,0,0)
    c.points.push_back(make_point_n3("q^(16)", rep, f, 3.0 * l * l + 2.0 * l + 3.0,
                                     {0.0, 0.0, -16.0 * l * (l + 1.0)}));
  }

  const Gate g17 = evaluate_gate(l, 1.0, std::max(1.0, l));
  if (g17 == Gate::present) {
    Family f = sphere_family(std::sqrt((l + 1.0) / (2.0 * l)),
                             std::sqrt((l - 1.0) / (2.0 * l)));
    const UnitQuaternion rep = f.sphere_point(kHalfPi, 0.0);  // q3 = 0
    // third eigenvalue stored at a representative with q3 = 0; it varies over the sphere
    c.points.push_back(make_point_n3("q^(17)", rep, f, sq(l - 1),
                                     {0.0, 0.0, -16.0 * (l + 1.0) * (1.0 - l)}));
  } else if (g17 == Gate::boundary) {
    c.boundary_notes.push_back(
        "q^(17) at existence boundary lambda = 1; degenerates into q^(0)");
  }
}

void check_lambda_preconditions(std::span<const double> l) {
  for (size_t i = 0; i < l.size(); ++i) {
    if (!(l[i] > 0.0))
      throw std::invalid_argument("catalog: singular values must be positive, lambda[" +
                                  std::to_string(i) + "] = " + std::to_string(l[i]));
    if (i + 1 < l.size() && l[i] < l[i + 1])
      throw std::invalid_argument("catalog: singular values must be sorted decreasing");
  }
}

void warn_near_coincident(Catalog& c, double gap, const char* which, double scale) {
  const double tol = numerics().coincidence_tol * std::max(1.0, scale);
  if (gap > tol && gap <= 1e-6 * std::max(1.0, scale)) {
    std::ostringstream w;
    w << "singular values " << which << " differ by " << gap
      << "; treated as distinct but the subcase dispatch is ill-conditioned here";
    c.warnings.push_back(w.str());
  }
}

}  // namespace

Catalog catalog_n2(double l1, double l2) {
  const double l[2] = {l1, l2};
  check_lambda_preconditions(std::span<const double>(l, 2));

  Catalog c;
  c.n = 2;
  c.lambdas = {l1, l2};
  c.pattern = LambdaPattern::n2;

  const MaterialParams reduced(1.0, 0.0);
  const DeformationGradient d(Mat::diag({l1, l2}));

  auto add = [&](std::string name, Mat m, double energy) {
    Rotation r(std::move(m));
    const RestrictedHessian h = restricted_hessian(r, d, reduced);
    CriticalPoint p{std::move(name), std::move(r), std::nullopt, Family{}, energy,
                    h.spectrum, Label::degenerate, GlobalFlag::none};
    p.label = classify(p.spectrum);
    c.points.push_back(std::move(p));
  };

  add("R^(1)", Mat::identity(2), sq(l1 - 1) + sq(l2 - 1));
  add("R^(2)", -Mat::identity(2), sq(l1 + 1) + sq(l2 + 1));

  const double s = l1 + l2;
  switch (evaluate_gate(s, 2.0, l1)) {
    case Gate::present: {
      const double cth = 2.0 / s;
      const double sth = std::sqrt(1.0 - cth * cth);
      add("R^(3)_+", Mat{{cth, -sth}, {sth, cth}}, 0.5 * sq(l1 - l2));
      add("R^(3)_-", Mat{{cth, sth}, {-sth, cth}}, 0.5 * sq(l1 - l2));
      break;
    }
    case Gate::boundary:
      c.boundary_notes.push_back(
          "R^(3) at existence boundary lambda1 + lambda2 = 2; degenerates into R^(1)");
      break;
    case Gate::absent:
      break;
  }

  global_extrema(c);
  return c;
}

Catalog catalog_n3(double l1, double l2, double l3) {
  const double l[3] = {l1, l2, l3};
  check_lambda_preconditions(std::span<const double>(l, 3));

  Catalog c;
  c.n = 3;

  const double scale = std::max(1.0, l1);
  const double ctol = numerics().coincidence_tol * scale;
  const bool eq12 = (l1 - l2) <= ctol;
  const bool eq23 = (l2 - l3) <= ctol;

  if (eq12 && eq23) {
    c.pattern = LambdaPattern::all_equal;
    const double lam = (l1 + l2 + l3) / 3.0;
    c.lambdas = {lam, lam, lam};
    build_all_equal(c, lam);
  } else if (eq12) {
    c.pattern = LambdaPattern::first_pair_equal;
    const double lam = 0.5 * (l1 + l2);
    c.lambdas = {lam, lam, l3};
    warn_near_coincident(c, l2 - l3, "lambda2, lambda3", scale);
    build_first_pair_equal(c, lam, l3);
  } else if (eq23) {
    c.pattern = LambdaPattern::last_pair_equal;
    const double lam = 0.5 * (l2 + l3);
    c.lambdas = {l1, lam, lam};
    warn_near_coincident(c, l1 - l2, "lambda1, lambda2", scale);
    build_last_pair_equal(c, l1, lam);
  } else {
    c.pattern = LambdaPattern::distinct;
    c.lambdas = {l1, l2, l3};
    warn_near_coincident(c, l1 - l2, "lambda1, lambda2", scale);
    warn_near_coincident(c, l2 - l3, "lambda2, lambda3", scale);
    build_distinct_items(c, l1, l2, l3, /*include_q4=*/true, /*include_q6=*/true);
  }

  global_extrema(c);
  return c;
}

void global_extrema(Catalog& catalog) {
  for (auto& p : catalog.points) p.global_flag = GlobalFlag::none;

  auto flag_prefix = [&](const std::string& prefix, GlobalFlag f) {
    bool hit = false;
    for (auto& p : catalog.points)
      if (p.name.rfind(prefix, 0) == 0) {
        p.global_flag = f;
        hit = true;
      }
    return hit;
  };
  auto gate_open = [&](double value, double threshold) {
    return evaluate_gate(value, threshold, std::max(1.0, catalog.lambdas.front())) ==
           Gate::present;
  };

  const auto& l = catalog.lambdas;
  switch (catalog.pattern) {
    case LambdaPattern::n2:
      flag_prefix("R^(2)", GlobalFlag::global_max);
      if (gate_open(l[0] + l[1], 2.0))
        flag_prefix("R^(3)", GlobalFlag::global_min);
      else
        flag_prefix("R^(1)", GlobalFlag::global_min);
      break;
    case LambdaPattern::distinct:
    case LambdaPattern::first_pair_equal:
      flag_prefix("q^(3)", GlobalFlag::global_max);
      if (gate_open(l[0] + l[1], 2.0))
        flag_prefix("q^(7)", GlobalFlag::global_min);
      else
        flag_prefix("q^(0)", GlobalFlag::global_min);
      break;
    case LambdaPattern::last_pair_equal:
      flag_prefix("q^(2)", GlobalFlag::global_max);
      flag_prefix("q^(3)", GlobalFlag::global_max);
      flag_prefix("q^(13)", GlobalFlag::global_max);
      if (gate_open(l[0] + l[1], 2.0)) {
        flag_prefix("q^(7)", GlobalFlag::global_min);
        flag_prefix("q^(8)", GlobalFlag::global_min);
        flag_prefix("q^(15)", GlobalFlag::global_min);
      } else {
        flag_prefix("q^(0)", GlobalFlag::global_min);
      }
      break;
    case LambdaPattern::all_equal:
      flag_prefix("q^(16)", GlobalFlag::global_max);
      if (gate_open(l[0], 1.0))
        flag_prefix("q^(17)", GlobalFlag::global_min);
      else
        flag_prefix("q^(0)", GlobalFlag::global_min);
      break;
  }

  // Cross-check the rule-derived flags against the catalog energies.
  double e_min = catalog.points.front().energy, e_max = e_min;
  for (const auto& p : catalog.points) {
    e_min = std::min(e_min, p.energy);
    e_max = std::max(e_max, p.energy);
  }
  const double tol = 1e-9 * (1.0 + std::fabs(e_min) + std::fabs(e_max));
  for (const auto& p : catalog.points) {
    const bool attains_min = std::fabs(p.energy - e_min) <= tol;
    const bool attains_max = std::fabs(p.energy - e_max) <= tol;
    const bool flagged_min = p.global_flag == GlobalFlag::global_min;
    const bool flagged_max = p.global_flag == GlobalFlag::global_max;
    if (flagged_min != attains_min || flagged_max != attains_max) {
      std::ostringstream msg;
      msg << "global_extrema: inconsistency at " << p.name << " (energy " << p.energy
          << ", catalog range [" << e_min << ", " << e_max << "], flag "
          << to_string(p.global_flag) << ")";
      throw std::logic_error(msg.str());
    }
  }
}

FeasibilityReport feasibility(std::span<const double> lambdas, const MaterialParams& p,
                              double det_f) {
  check_lambda_preconditions(lambdas);
  FeasibilityReport r;
  r.product_lambda = 1.0;
  for (double l : lambdas) r.product_lambda *= l;
  const double ratio = (p.mu - p.mu_c) / p.mu;
  r.required_value = std::pow(ratio, static_cast<double>(lambdas.size()));

  const double target = r.required_value * det_f;
  r.physically_consistent = std::fabs(r.product_lambda - target) <= 1e-8;

  std::ostringstream note;
  note << "prod(lambda) = " << r.product_lambda << " vs ((mu-mu_c)/mu)^n det F = " << target
       << (r.physically_consistent ? "; consistent" : "; inconsistent");
  if (det_f == 1.0) {
    note << " (isochoric)";
    const double min_l = lambdas.back();
    if (p.mu_c > 0.0 && p.mu > p.mu_c && min_l >= 1.0)
      note << "; lambda >= 1 requires prod(lambda) >= 1 > ((mu-mu_c)/mu)^n, impossible in "
              "the considered model";
  }
  r.note = note.str();
  return r;
}

NamedExample shear_example(double k, const MaterialParams& p) {
  if (k == 0.0) throw std::invalid_argument("shear_example: k must be nonzero");
  const double ratio = (p.mu - p.mu_c) / p.mu;
  const double root = 0.5 * std::sqrt(k * k * (k * k + 4.0));
  std::ostringstream d;
  d << "simple shear, k = " << k;
  return NamedExample{
      d.str(),
      Mat{{1.0, k, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}},
      p,
      {ratio * std::sqrt(1.0 + 0.5 * k * k + root), ratio,
       ratio * std::sqrt(1.0 + 0.5 * k * k - root)}};
}

NamedExample equibiaxial_stretch_example(double k, const MaterialParams& p) {
  if (!(k > 0.0) || k == 1.0)
    throw std::invalid_argument("equibiaxial_stretch_example: need k > 0, k != 1");
  const double ratio = (p.mu - p.mu_c) / p.mu;
  std::ostringstream d;
  if (k > 1.0) {
    d << "isochoric equi-biaxial stretch, k = " << k << " (lambda1 = lambda2 > lambda3)";
    return NamedExample{d.str(),
                        Mat{{k, 0.0, 0.0}, {0.0, k, 0.0}, {0.0, 0.0, 1.0 / (k * k)}},
                        p,
                        {ratio * k, ratio * k, ratio / (k * k)}};
  }
  d << "isochoric equi-biaxial stretch, k = " << k << " (lambda1 > lambda2 = lambda3)";
  return NamedExample{d.str(),
                      Mat{{1.0 / (k * k), 0.0, 0.0}, {0.0, k, 0.0}, {0.0, 0.0, k}},
                      p,
                      {ratio / (k * k), ratio * k, ratio * k}};
}

std::vector<NamedExample> named_examples() {
  const MaterialParams p(1.0, 0.0);
  return {shear_example(1.0, p), equibiaxial_stretch_example(2.0, p),
          equibiaxial_stretch_example(0.5, p)};
}

}  // namespace cosserat
