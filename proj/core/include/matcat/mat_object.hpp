#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "matcat/graded.hpp"
#include "matcat/index_space.hpp"

namespace matcat {

/// Object of the ambient matrix category: a decidable index set together
/// with a computable fiber assigning a base object to each member. Objects
/// are immutable construction trees; equality is structural.
class MatObject {
 public:
  /// Finite explicit family index -> fiber.
  static MatObject family(std::vector<std::pair<Nat, GradedObject>> fibers);
  static MatObject singleton(const Nat& i, GradedObject v);
  /// The unit object: the base unit sitting at the base point 0.
  static MatObject unit();
  /// Constant fiber over an arbitrary descriptor (test and probe use).
  static MatObject constant(IndexSet s, GradedObject v);
  static MatObject tensor(const MatObject& f, const MatObject& g);
  /// Pointwise dual: same index set, dualized fibers.
  static MatObject dual(const MatObject& f);
  /// The object with index set gamma(diagonal) and fiber
  /// gamma(x, x) |-> decode(x)* (x) decode(x) over the fixed encoding.
  static MatObject hbar();
  static MatObject coproduct_object(std::vector<MatObject> summands);

  const IndexSet& index_set() const;
  /// Fiber at a member index. Throws MembershipError on non-members.
  GradedObject fiber(const Nat& z) const;

  bool operator==(const MatObject& o) const;

 private:
  struct Node;
  explicit MatObject(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

}  // namespace matcat
