#pragma once

// Explicit finite groups: closure of generators into an indexed element
// list with a multiplication table, conjugacy classes, subgroup closures,
// and the matrix families q^3(q-1), q^3 and their Galois extension.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chardeg/finite_field.hpp"

namespace chardeg::groups {

/// Largest order for which a full multiplication table is kept and
/// character tables are attempted.
inline constexpr std::size_t kTableLimit = 5000;

enum class ElementKind { permutation, matrix, semilinear };

/// What the entries of an element mean. semilinear elements are pairs
/// (A, a) with A a matrix and a an exponent of the Frobenius sigma, with
/// (A, a)(B, b) = (sigma^b(A) B, a + b mod f).
struct Representation {
  ElementKind kind = ElementKind::permutation;
  unsigned degree = 0;  // points, or matrix dimension
  std::shared_ptr<const FiniteField> field;

  static Representation permutations(unsigned points);
  static Representation matrices(std::shared_ptr<const FiniteField> field, unsigned dim);
  static Representation semilinear(std::shared_ptr<const FiniteField> field, unsigned dim);
};

/// Permutation images (0-based), or row-major field-encoded entries. frob
/// is used only by semilinear elements.
struct GroupElement {
  std::vector<int> data;
  int frob = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const Representation& rep);
GroupElement multiply(const Representation& rep, const GroupElement& a, const GroupElement& b);
/// Throws std::invalid_argument when the element is malformed, a
/// non-bijection, or a singular matrix.
void check_element(const Representation& rep, const GroupElement& g);

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

class GroupTable {
 public:
  const Representation& representation() const { return rep_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t identity() const { return 0; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  bool has_table() const { return !cayley_.empty(); }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t pow(std::size_t a, std::uint64_t k) const;
  unsigned element_order(std::size_t a) const;
  std::optional<std::size_t> index_of(const GroupElement& g) const;

 private:
  friend GroupTable close_group(const Representation&, const std::vector<GroupElement>&,
                                std::size_t);
  Representation rep_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint16_t> cayley_;
  std::vector<std::uint16_t> inverse_;
};

/// Breadth-first closure. The identity gets index 0. Throws
/// ResourceLimitError past max_order and std::invalid_argument on bad
/// generators.
GroupTable close_group(const Representation& rep, const std::vector<GroupElement>& generators,
                       std::size_t max_order = kTableLimit);

/// Classes in order of their smallest element; each class sorted. The
/// identity class comes first.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g);

/// Sorted element indices of the subgroup generated by the given elements.
std::vector<std::size_t> generated_subgroup(const GroupTable& g,
                                            const std::vector<std::size_t>& gens);
/// [H, H] for a subgroup H given as a sorted index list.
std::vector<std::size_t> derived_subgroup(const GroupTable& g, const std::vector<std::size_t>& h);
/// Orders of G = G^(0) > G^(1) > ... down to the first repeated term.
std::vector<std::size_t> derived_series_orders(const GroupTable& g);
bool is_solvable(const GroupTable& g);
unsigned exponent(const GroupTable& g);

/// Elements whose order is a power of p; a subgroup exactly when the Sylow
/// p-subgroup is normal.
std::vector<std::size_t> p_elements(const GroupTable& g, std::uint64_t p);
bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& set);

// ---- Constructions ----

GroupTable cyclic_group(unsigned n);
GroupTable dihedral_group(unsigned n);  // order 2n, acting on n points
GroupTable symmetric_group(unsigned n);
GroupTable alternating_group(unsigned n);
/// SL_2(p) or GL_2(p) over a prime field.
GroupTable sl2(unsigned p);
GroupTable gl2(unsigned p);
/// SL_3(2), isomorphic to PSL_2(7), generated by three transvections.
GroupTable sl3_2();
/// Quaternion group of order 8 inside SL_2(3).
GroupTable quaternion8();

enum class ExampleKind { isaacs_K, p_semidirect_L, heisenberg };

std::string to_string(ExampleKind k);

/// Upper unitriangular-with-corner matrices over F_q. isaacs_K is generated
/// by elements of the displayed form with all four parameters, p_semidirect_L
/// by separate generators of the unitriangular part P and the diagonal L,
/// heisenberg by P alone. Throws ResourceLimitError for q > 9.
GroupTable build_example_group(ExampleKind kind, unsigned q,
                               std::size_t max_order = 20000);
/// K extended by the Galois group of F_q over F_p, q <= 9.
GroupTable build_gamma(unsigned q, std::size_t max_order = 20000);

/// True when element i has the form [[1,x,y],[0,1,z],[0,0,t]] with t != 0.
bool has_isaacs_form(const GroupTable& g, std::size_t i);

/// JSON group specification:
///   {"kind": "permutation", "degree": n, "generators": [[images...], ...]}
///   {"kind": "matrix", "field": {"p": p, "f": f, "modulus": [...]?},
///    "dimension": k, "generators": [[[row], ...], ...]}
/// Throws ConfigError on any malformed input.
GroupTable load_group_spec(const std::string& path, std::size_t max_order = kTableLimit);
GroupTable parse_group_spec(const std::string& json_text, std::size_t max_order = kTableLimit);

}  // namespace chardeg::groups
