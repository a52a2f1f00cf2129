#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mixcay/group.hpp"

namespace mixcay {

using ClassIndex = std::size_t;
using Complex = std::complex<double>;

/// Conjugacy structure of a group. Classes are ordered by their minimum
/// element index, so class 0 is {identity}; the representative of each
/// class is its minimum element.
struct ClassData {
  std::size_t group_order = 0;
  std::vector<ClassIndex> class_of;          // element -> class
  std::vector<Element> reps;                 // class -> representative
  std::vector<std::vector<Element>> members; // class -> sorted members
  std::vector<std::size_t> sizes;            // |Cl(g)|
  std::vector<ClassIndex> inverse_class;     // Cl(g) -> Cl(g^-1)
  std::vector<std::size_t> centralizer_order;
  std::vector<std::size_t> rep_order;        // ord(rep)
  std::vector<std::vector<ClassIndex>> power_map;  // [c][r] = Cl(rep^r), r < ord(rep)

  std::size_t num_classes() const noexcept { return reps.size(); }
  ClassIndex power_class(ClassIndex c, long long k) const;
};

ClassData conjugacy_classes(const Group& group);

/// |{(x, y) : x in Cl_i, y in Cl_j, xy = z}| for a fixed z in Cl_k.
std::size_t structure_constant(const Group& group, const ClassData& classes, ClassIndex i, ClassIndex j,
                               ClassIndex k);

struct CharacterTableOptions {
  double tolerance = 1e-8;
  int retries = 8;
  std::uint64_t seed = 0x5eed'c1a5'5a15ULL;
  std::size_t max_classes = 400;
};

/// Irreducible characters on class representatives.
///
/// Rows are sorted by degree ascending, then by the value vector rounded to
/// six decimals in descending lexicographic (re, im) order, which puts the
/// trivial character first.
class CharacterTable {
 public:
  CharacterTable() = default;

  /// Wraps externally supplied values (e.g. a table read from CSV). Degrees
  /// are the rounded identity-class values and the conjugate pairing is the
  /// nearest row match; no orthogonality check is made.
  static CharacterTable from_values(std::vector<std::vector<Complex>> values);

  std::size_t size() const noexcept { return values_.size(); }
  Complex value(std::size_t j, ClassIndex c) const { return values_[j][c]; }
  const std::vector<Complex>& row(std::size_t j) const { return values_[j]; }
  int degree(std::size_t j) const { return degrees_[j]; }
  /// k with chi_k = conj(chi_j).
  std::size_t conjugate(std::size_t j) const { return conj_pair_[j]; }

 private:
  friend CharacterTable character_table(const Group&, const ClassData&, const CharacterTableOptions&);
  std::vector<std::vector<Complex>> values_;
  std::vector<int> degrees_;
  std::vector<std::size_t> conj_pair_;
};

/// Burnside's class-matrix method: a random Hermitian combination of the
/// (symmetrized) class multiplication matrices is diagonalized and each
/// eigenvector yields one irreducible character. Verifies both orthogonality
/// relations; throws DegenerateCombination or OrthogonalityFailure after the
/// configured retries, SizeExceeded above `max_classes`.
CharacterTable character_table(const Group& group, const ClassData& classes,
                               const CharacterTableOptions& options = {});

struct OrthogonalityResidual {
  double rows = 0.0;     // max |(1/n) sum_c |C_c| chi_j conj(chi_l) - delta_jl|
  double columns = 0.0;  // max |sum_j chi_j(c) conj(chi_j(c')) / |C(c)| - delta_cc'|
};

OrthogonalityResidual orthogonality_residual(const ClassData& classes, const CharacterTable& table);

}  // namespace mixcay
