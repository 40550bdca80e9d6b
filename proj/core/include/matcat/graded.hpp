#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "matcat/ratmat.hpp"

namespace matcat {

using Degree = long;

/// Object of the concrete base category: a finite-dimensional integer-graded
/// vector space. The basis is an ordered list of slots, one per basis vector,
/// each carrying its degree. The constructor from a degree->dimension map
/// emits slots in ascending degree; tensoring enumerates slot pairs row-major
/// (left factor major), which makes the tensor product associative and unital
/// on the nose at the level of matrices, not just dimensions.
class GradedObject {
 public:
  GradedObject() = default;  // zero object

  static GradedObject unit();  // one slot in degree 0
  static GradedObject from_grades(const std::map<Degree, int>& dims);
  static GradedObject from_slots(std::vector<Degree> slots);
  /// Single homogeneous component of the given dimension.
  static GradedObject line(Degree d, int dim = 1);

  const std::vector<Degree>& slots() const { return slots_; }
  std::size_t total_dim() const { return slots_.size(); }
  bool is_zero() const { return slots_.empty(); }

  int dim(Degree d) const;
  std::map<Degree, int> grades() const;

  /// Slot indices carrying degree d, in slot order.
  std::span<const std::size_t> positions(Degree d) const;
  /// Position of slot i within its own degree group.
  std::size_t rank(std::size_t i) const { return rank_[i]; }

  std::string to_string() const;

  bool operator==(const GradedObject& o) const { return slots_ == o.slots_; }

 private:
  explicit GradedObject(std::vector<Degree> slots);
  void index();

  std::vector<Degree> slots_;
  std::map<Degree, std::vector<std::size_t>> by_degree_;
  std::vector<std::size_t> rank_;
};

GradedObject tensor(const GradedObject& a, const GradedObject& b);
GradedObject dual(const GradedObject& a);

/// Morphism of graded vector spaces: one exact rational block per degree,
/// stored only where nonzero. Shape of the block at degree d is
/// dst.dim(d) x src.dim(d), rows/columns in slot order.
class GradedMorphism {
 public:
  GradedMorphism(GradedObject src, GradedObject dst,
                 std::map<Degree, Matrix> blocks);

  static GradedMorphism zero(GradedObject src, GradedObject dst);
  static GradedMorphism identity(const GradedObject& a);

  const GradedObject& src() const { return src_; }
  const GradedObject& dst() const { return dst_; }
  const std::map<Degree, Matrix>& blocks() const { return blocks_; }

  /// Materialized block at degree d (zero matrix when absent).
  Matrix block(Degree d) const;
  const Matrix* block_ptr(Degree d) const;

  bool is_zero() const { return blocks_.empty(); }
  bool is_identity() const;

  std::string to_string() const;

  bool operator==(const GradedMorphism& o) const = default;

 private:
  GradedObject src_, dst_;
  std::map<Degree, Matrix> blocks_;
};

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f);
GradedMorphism add(const GradedMorphism& f, const GradedMorphism& g);
GradedMorphism negate(const GradedMorphism& f);
GradedMorphism scale(const Rat& s, const GradedMorphism& f);
GradedMorphism tensor(const GradedMorphism& f, const GradedMorphism& g);
GradedMorphism tensor_many(std::span<const GradedMorphism> fs);

/// Transpose with degree reflection: (f: a -> b) |-> (f*: b* -> a*).
GradedMorphism dual_transpose(const GradedMorphism& f);

/// Canonical pairing d_a: a* (x) a -> I.
GradedMorphism eval_morphism(const GradedObject& a);
/// Canonical copairing b_a: I -> a (x) a*.
GradedMorphism coev_morphism(const GradedObject& a);

enum class Instance { graded, symmetric };

/// The braided base category instance: integer-graded vector spaces with
/// bicharacter braiding q^{mn} and twist q^{m^2}, or the symmetric control
/// (plain flip, identity twist). q = 1 coincides with the symmetric case.
struct BaseCategory {
  Rat q = 2;
  Instance instance = Instance::graded;

  void validate() const;  // q != 0

  Rat braid_factor(Degree m, Degree n) const;
  Rat twist_factor(Degree m) const;

  /// c_{a,b}: a (x) b -> b (x) a.
  GradedMorphism braid(const GradedObject& a, const GradedObject& b) const;
  /// c_{a,b}^{-1}: b (x) a -> a (x) b.
  GradedMorphism braid_inverse(const GradedObject& a,
                               const GradedObject& b) const;
  GradedMorphism twist(const GradedObject& a) const;
  GradedMorphism twist_inverse(const GradedObject& a) const;
};

}  // namespace matcat
