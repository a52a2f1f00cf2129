#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/class_algebra.hpp"
#include "mixcay/context.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay {

inline constexpr double kSnapTolerance = 1e-6;

/// |x - round(x)|
double integer_distance(double x);

// ---------------------------------------------------------------------------
// Rationality of character values on Q(omega3)[G]

/// Per-condition verdicts on the class sums sigma_c = sum_{s in Cl_c} c_s.
struct RationalityConditions {
  /// sigma_c == conj(sigma_{c^-1}) for every class.
  bool conjugate_symmetric = true;
  /// sigma constant across classes whose representatives are related by
  /// y = x^k, k = 1 (mod 3), inside Gamma(3).
  bool constant_on_gamma3_orbits = true;
  /// Re sigma_c == Re sigma_{c^-1} outside Gamma(3).
  bool inverse_real_parts_equal = true;
  /// Im sigma_c == 0 outside Gamma(3).
  bool real_outside_gamma3 = true;
  /// sigma constant across classes meeting a common atom [x] outside
  /// Gamma(3). Not one of the four conditions below; without it they are
  /// not sufficient (e.g. x = g + g^-1 in a cyclic group of order 5).
  bool constant_on_atoms_outside_gamma3 = true;

  /// Conjugate symmetry, Gamma(3)-orbit constancy, equal inverse real parts
  /// and reality outside Gamma(3).
  bool four_conditions() const {
    return conjugate_symmetric && constant_on_gamma3_orbits && inverse_real_parts_equal && real_outside_gamma3;
  }
  /// The four conditions plus atom constancy outside Gamma(3).
  bool complete() const { return four_conditions() && constant_on_atoms_outside_gamma3; }
};

RationalityConditions check_rationality_conditions(const Group& group, const ClassData& classes,
                                                   const GroupAlgebraElement& x);

struct NumericRationality {
  bool rational = true;
  /// Per character: max(|Im chi_j(x)|, distance of Re chi_j(x) to (1/D)Z),
  /// D the common coefficient denominator.
  std::vector<double> distances;
};

/// chi_j(x) is rational for every j, decided numerically. Since D*chi_j(x)
/// is an algebraic integer, it is rational exactly when it is an integer.
NumericRationality characters_rational(const ClassData& classes, const CharacterTable& table,
                                       const GroupAlgebraElement& x, double tol = kSnapTolerance);

// ---------------------------------------------------------------------------
// HS-integrality

struct StructuralVerdict {
  bool integral = false;
  bool symmetric_part_in_b = false;
  bool skew_part_in_e = false;
  /// First element whose closure requirement is violated, if any.
  std::optional<Element> offending;
  std::string witness;
};

struct SpectralVerdict {
  bool integral = false;
  CharacterSpectrum spectrum;
  std::vector<double> distances;  // per character
};

struct IntegralityReport {
  StructuralVerdict structural;
  SpectralVerdict spectral;
  bool agree = false;
};

/// S \ Sbar in B(G) and Sbar in E(G). Throws NotNormal.
StructuralVerdict is_hs_integral_structural(const Group& group, const ClassData& classes, const ConnectionSet& set);

/// Every HS-eigenvalue within `tol` of an integer. Throws NotNormal.
SpectralVerdict is_hs_integral_spectral(const ClassData& classes, const CharacterTable& table,
                                        const ConnectionSet& set, double tol = kSnapTolerance);

IntegralityReport integrality_report(const GroupContext& ctx, const ConnectionSet& set, double tol = kSnapTolerance);

struct DecompositionCheck {
  bool whole = false;
  bool symmetric_part = false;
  bool skew_part = false;

  bool conjunction() const { return symmetric_part && skew_part; }
  bool consistent() const { return whole == conjunction(); }
};

/// Spectral HS-integrality of S, S \ Sbar and Sbar. Throws NotNormal.
DecompositionCheck decompose_check(const Group& group, const ClassData& classes, const CharacterTable& table,
                                   const ConnectionSet& set, double tol = kSnapTolerance);

// ---------------------------------------------------------------------------
// Eisenstein integrality

struct FGValues {
  std::vector<double> f;
  std::vector<double> g;
  /// g_j - g_k with chi_k = conj(chi_j): the omega3 coefficient of the
  /// adjacency eigenvalue f_j + g_j + omega3 (g_j - g_k).
  std::vector<double> g_minus_conjugate;

  Complex adjacency_eigenvalue(std::size_t j) const {
    return f[j] + g[j] + unity::omega3 * g_minus_conjugate[j];
  }
};

/// f_j = (1/d_j) sum_{S\Sbar} chi_j,
/// g_j = (1/d_j) sum_{Sbar} (w chi_j(s) + conj(w) chi_j(s^-1)), w = 1/2 - i sqrt(3)/6.
/// Throws NotNormal.
FGValues f_g_values(const ClassData& classes, const CharacterTable& table, const ConnectionSet& set);

/// a + b*omega3 with real coordinates, as recovered from a complex number.
struct EisensteinCoordinates {
  double a = 0.0;
  double b = 0.0;
};
EisensteinCoordinates eisenstein_coordinates(Complex z);

struct EisensteinReport {
  FGValues values;
  std::vector<long long> f_snapped;
  std::vector<long long> g_snapped;
  std::vector<double> f_distance;
  std::vector<double> g_distance;
  /// All f_j and g_j integral.
  bool verdict = false;
  /// Every adjacency eigenvalue within tol of an Eisenstein integer.
  bool adjacency_verdict = false;
  bool routes_agree = false;
  /// Spectral HS-integrality of the same set.
  bool hs_integral = false;
  /// verdict implies hs_integral.
  bool implication_holds = false;
  CharacterSpectrum adjacency;
};

/// Throws NotNormal.
EisensteinReport is_eisenstein_integral(const ClassData& classes, const CharacterTable& table,
                                        const ConnectionSet& set, double tol = kSnapTolerance);

// ---------------------------------------------------------------------------
// Block sums over S1_x and S2_y

/// C_x(j) = (1/d_j) sum_{s in S1_x} chi_j(s) for every j. Throws IdentityElement.
std::vector<double> c_values(const Group& group, const ClassData& classes, const CharacterTable& table, Element x);
double c_value(const Group& group, const ClassData& classes, const CharacterTable& table, Element x, std::size_t j);

/// T_y(j) = (1/d_j) sum_{s in S2_y} sqrt(3) i (chi_j(s) - chi_j(s^-1)) for
/// every j; nullopt when S2_y does not exist. Throws NotInGamma3.
std::optional<std::vector<double>> t_values(const Group& group, const ClassData& classes, const CharacterTable& table,
                                            Element y);
std::optional<double> t_value(const Group& group, const ClassData& classes, const CharacterTable& table, Element y,
                              std::size_t j);

struct ConjectureRecord {
  std::string group;
  Element y = 0;
  std::string y_label;
  std::size_t character = 0;
  double c = 0.0;
  double t = 0.0;
  double t_over_3_distance = 0.0;
  double c_distance = 0.0;
  double t_distance = 0.0;
  bool parity_ok = true;
};

struct ConjectureScanResult {
  std::vector<std::string> groups;
  std::size_t blocks_scanned = 0;
  std::vector<ConjectureRecord> records;
  /// T_y(j)/3 off an integer.
  std::vector<ConjectureRecord> counterexamples;
  /// C or T off an integer, or C and T of different parity.
  std::vector<ConjectureRecord> invariant_failures;

  bool verdict() const { return counterexamples.empty(); }
  bool clean() const { return counterexamples.empty() && invariant_failures.empty(); }
};

/// Scans one representative y of every join class of conjugation and the
/// relation behind <<y>> whose S2_y exists. Results are appended to `out`.
void conjecture_scan(const GroupContext& ctx, ConjectureScanResult& out, double tol = kSnapTolerance,
                     bool keep_records = true);

ConjectureScanResult conjecture_scan(const std::vector<GroupSpec>& groups, const ContextOptions& options = {},
                                     double tol = kSnapTolerance, bool keep_records = true);

struct BlockCheck {
  /// T_y(j)/3 integral for every y in Sbar and every j.
  bool hypothesis_holds = true;
  bool hs_integral = false;
  bool eisenstein_integral = false;
  /// hypothesis and HS-integral imply Eisenstein-integral.
  bool implication_holds = true;
  /// Least elements of the greedy blocks S2_y partitioning Sbar; empty when
  /// Sbar admits no such partition.
  std::vector<Element> block_reps;
  bool partitioned = false;
  std::vector<double> g_direct;
  std::vector<double> g_from_blocks;
  double max_g_gap = 0.0;
  bool g_agree = true;
};

/// Rebuilds g_j as (1/2) sum_l (C_{y_l}(j) - T_{y_l}(j)/3) over the greedy
/// partition of Sbar into blocks S2_y, compares with the direct g_j, and
/// checks that HS-integrality implies Eisenstein integrality whenever every
/// T_y(j)/3 is integral. Throws NotNormal.
BlockCheck block_decomposition_check(const Group& group, const ClassData& classes, const CharacterTable& table,
                                     const ConnectionSet& set, double tol = kSnapTolerance);

}  // namespace mixcay
