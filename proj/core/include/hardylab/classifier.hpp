#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardylab/disk_geometry.hpp"
#include "hardylab/symbols.hpp"

namespace hardylab {

enum class RotationKind { Zero, InsideDisk, RootOfUnity, IrrationalRotation, OutsideDisk };

std::string_view to_string(RotationKind k);

struct RotationClass {
  RotationKind kind = RotationKind::Zero;
  std::size_t order = 0;   ///< q for RootOfUnity
  bool exact = false;      ///< decided from an exact input form
  std::optional<std::pair<std::int64_t, std::int64_t>> rotation;  ///< p/q turns when known
  std::optional<double> angle_turns;
  double tolerance = 0.0;
  cplx lambda = 0.0;       ///< numeric value used downstream
};

/// Exact forms are decided symbolically. A unimodular Gaussian rational other than
/// +-1, +-i is never a root of unity (the only roots of unity in Q(i)).
/// Numeric unimodular input searches the least q <= q_max with |lambda^q - 1| <= tol.
RotationClass classify_rotation(const LambdaSpec& lambda, std::size_t q_max = 10000, double tol = 1e-9);
RotationClass classify_rotation(cplx lambda, std::size_t q_max = 10000, double tol = 1e-9);

enum class Dynamics {
  Hypercyclic,
  NotHypercyclic,
  SupercyclicNotHypercyclic,
  Supercyclic,
  NotSupercyclic,
  NoEigenoperatorExists,
  Undetermined
};
enum class Grade { ProvenByTheorem, NumericalEvidence, Undetermined };
enum class Tri { Yes, No, Unknown };

std::string_view to_string(Dynamics d);
std::string_view to_string(Grade g);
std::string_view to_string(Tri t);

/// Certified upper bound ||T^n|| <= constant * rate^n for the truncated operator.
struct OrbitBound {
  enum class Kind { PowerBounded, Geometric };
  Kind kind = Kind::Geometric;
  double constant = 1.0;
  double rate = 1.0;
  std::string reason;

  double log_bound(std::size_t n) const;
};

struct ClassifierConfig {
  std::size_t truncation = 256;
  std::size_t q_max = 10000;
  double rotation_tol = 1e-9;
  double zero_tol = 1e-12;
  double margin = 1e-6;
  std::size_t grid_radii = 32;
  std::size_t grid_angles = 256;
  WitnessThresholds thresholds{};
  std::vector<std::size_t> schedule = default_schedule();
  std::size_t power_probe_n = 256;
  WitnessGrid witness_grid{};
  /// Contour radius for the zero count; 0 picks 1 - 1e-6 for polynomials, 0.999 otherwise.
  double zero_radius = 0.0;

  /// Throws ConfigError when a tolerance or size is out of range.
  void validate() const;
};

struct Verdict {
  Dynamics dynamics = Dynamics::Undetermined;
  Grade grade = Grade::Undetermined;
  std::string rule;
  Tri hypercyclic = Tri::Unknown;
  Tri supercyclic = Tri::Unknown;
  Grade supercyclic_grade = Grade::Undetermined;
  RotationClass rotation;
  OrbitBound bound;
  std::vector<std::string> notes;

  std::optional<ModulusExtrema> extrema;      ///< of phi, or of Phi_q for roots of unity
  std::optional<CircleRelation> relation;
  std::optional<ZeroCount> zero_count;
  std::optional<PowerBoundReport> power_probe;
  std::vector<WitnessReport> witnesses;
};

/// Walks the decision ladder and returns the first rule that fires.
Verdict classify_dynamics(const LambdaSpec& lambda, const SymbolSpec& phi, const ClassifierConfig& config = {});

enum class CriterionCondition { X0, Y0 };

struct SufficientFiring {
  int rule = 0;
  CriterionCondition condition = CriterionCondition::X0;
  std::string certificate;
};

struct SufficientReport {
  bool x0 = false;
  bool y0 = false;
  std::vector<SufficientFiring> firings;
  /// Set when |phi(0)| = 1 and lambda is an irrational rotation: nothing is claimed.
  bool undetermined = false;
};

/// Which halves of the hypercyclicity criterion hold along the full sequence, by rule.
SufficientReport sufficient_condition_report(const LambdaSpec& lambda, const SymbolSpec& phi,
                                             const ClassifierConfig& config = {});

}  // namespace hardylab
