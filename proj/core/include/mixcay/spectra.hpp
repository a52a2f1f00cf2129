#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/class_algebra.hpp"
#include "mixcay/eisenstein.hpp"
#include "mixcay/hermitian_eigen.hpp"

namespace mixcay {

/// H(G): 1 on undirected edges, omega6 on arcs u->v, omega6^5 on reversed arcs.
using HermitianAdjacency = ComplexMatrix;
/// A(G): a_uv = 1 iff v u^-1 in S.
using ZeroOneAdjacency = Matrix<double>;

inline constexpr double kMergeGap = 1e-6;

struct SpectrumEntry {
  Complex value;
  std::size_t multiplicity = 0;
};

/// Multiset of eigenvalues, sorted by (real, imag), near-equal values merged.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  std::size_t total_multiplicity() const;
  /// e.g. "{-8^1, 0^9, 4^2}"
  std::string to_string(int precision = 6) const;
};

/// Sorts and merges values whose real and imaginary parts both differ by
/// less than `gap` from the running group's first member.
Spectrum merge_spectrum(std::vector<SpectrumEntry> raw, double gap = kMergeGap);

/// Same number of entries, equal multiplicities and values within `tol`,
/// entry by entry.
bool spectra_agree(const Spectrum& lhs, const Spectrum& rhs, double tol);

/// Eigenvalue per irreducible character, with multiplicity d_j^2.
struct CharacterSpectrum {
  std::vector<Complex> values;
  std::vector<std::size_t> multiplicities;

  Spectrum merged(double gap = kMergeGap) const;
};

HermitianAdjacency build_h_matrix(const Group& group, const ConnectionSet& set);
ZeroOneAdjacency build_a_matrix(const Group& group, const ConnectionSet& set);

/// gamma_j = lambda_j + mu_j with
///   lambda_j = (1/d_j) sum_{s in S\Sbar} chi_j(s)
///   mu_j     = (1/d_j) sum_{s in Sbar} (omega6 chi_j(s) + omega6^5 chi_j(s^-1)).
/// Throws NotNormal.
CharacterSpectrum hs_spectrum_by_characters(const ClassData& classes, const CharacterTable& table,
                                            const ConnectionSet& set);

/// (1/d_j) sum_{s in S} chi_j(s). Throws NotNormal.
CharacterSpectrum adjacency_spectrum_by_characters(const ClassData& classes, const CharacterTable& table,
                                                   const ConnectionSet& set);

/// Dense Hermitian eigen-decomposition of H with eigenvalues merged at
/// `kMergeGap`. Throws ConvergenceFailure.
Spectrum hs_spectrum_direct(const HermitianAdjacency& h);

struct MomentCheck {
  bool ok = true;
  std::optional<int> failing_k;
};

/// trace(M^k) == sum mult * value^k for k = 1..kmax, within
/// 1e-6 * n * max(1, max|value|)^k.
MomentCheck moment_check(const ComplexMatrix& m, const Spectrum& spectrum, int kmax);
MomentCheck moment_check(const ZeroOneAdjacency& m, const Spectrum& spectrum, int kmax);

/// Element sum_g c_g g of Q(omega3)[G], stored densely.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::size_t order) : coefficients_(order) {}

  std::size_t order() const noexcept { return coefficients_.size(); }
  const EisensteinRational& operator[](Element g) const { return coefficients_[g]; }
  EisensteinRational& operator[](Element g) { return coefficients_[g]; }

  /// sum_{s in Cl_c} c_s, exactly.
  EisensteinRational class_sum(const ClassData& classes, ClassIndex c) const;
  /// Least common multiple of all coefficient denominators.
  long long common_denominator() const;

 private:
  std::vector<EisensteinRational> coefficients_;
};

/// chi_j(x) = sum_c (sum_{s in Cl_c} c_s) chi_j(rep_c).
Complex evaluate_character_sum(const ClassData& classes, const CharacterTable& table, const GroupAlgebraElement& x,
                               std::size_t j);

/// Convenience: per-class sum of chi over the set's members in that class,
/// divided by the degree, i.e. (1/d_j) sum_{s in set} chi_j(s). The set must
/// be normal.
Complex normalized_character_sum(const ClassData& classes, const CharacterTable& table, const ElementSet& set,
                                 std::size_t j);

}  // namespace mixcay
