#pragma once

// Exact character tables of small groups by the Burnside-Dixon method:
// common eigenvectors of the class multiplication matrices modulo a prime
// l = 1 (mod exponent), lifted to cyclotomic integers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chardeg/cyclotomic.hpp"
#include "chardeg/degree_multiset.hpp"
#include "chardeg/groups.hpp"

namespace chardeg::chars {

using cyclo::Cyclo;

struct ClassInfo {
  std::size_t representative;
  std::size_t size;
  unsigned element_order;
};

struct CharacterTable {
  std::size_t group_order = 0;
  unsigned conductor = 1;   // exponent of the group
  std::uint64_t prime = 0;  // the modular prime used
  std::vector<ClassInfo> classes;
  std::vector<std::size_t> class_of;       // element index -> class index
  std::vector<std::size_t> inverse_class;  // class of g^-1
  // characters[c][j] = value of the c-th irreducible on class j. Row 0 is
  // trivial; rows are sorted by degree.
  std::vector<std::vector<Cyclo>> characters;

  std::vector<std::uint64_t> degrees() const;
  DegreeMultiset degree_multiset() const;
};

/// Throws ResourceLimitError when the group is too large for a table, and
/// std::logic_error if any internal consistency test fails (including the
/// orthogonality relations, which are checked before returning).
CharacterTable dixon_character_table(const groups::GroupTable& g);

struct TableCheck {
  bool square = false;          // rows == classes
  bool sum_of_squares = false;  // sum d^2 == |G|
  bool degrees_divide = false;
  bool row_orthogonal = false;
  bool column_orthogonal = false;
  bool passed() const {
    return square && sum_of_squares && degrees_divide && row_orthogonal && column_orthogonal;
  }
};

TableCheck check_table(const CharacterTable& t);

struct GagolaReport {
  bool is_gagola = false;
  std::optional<std::uint64_t> character_degree;
  // Classes on which the reported character vanishes; without a Gagola
  // character, the largest vanishing count of any irreducible.
  std::size_t vanishing_classes = 0;
  std::size_t minimal_normal_count = 0;
  std::optional<std::size_t> minimal_normal_order;  // set when unique
  std::vector<std::size_t> minimal_normal;          // its elements, when unique
};

/// A Gagola character is irreducible and nonzero on exactly two classes.
GagolaReport gagola_analyze(const groups::GroupTable& g, const CharacterTable& t);
GagolaReport gagola_analyze(const groups::GroupTable& g);

}  // namespace chardeg::chars
