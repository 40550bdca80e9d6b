#include "matcat/mat_object.hpp"

#include <algorithm>

#include "matcat/encoding.hpp"
#include "matcat/errors.hpp"

namespace matcat {

namespace {
enum class ObjKind { family, constant, tensor, dual, hbar, coproduct };
}

struct MatObject::Node {
  ObjKind kind;
  IndexSet set = IndexSet::empty();
  std::vector<std::pair<Nat, GradedObject>> fibers;  // family
  GradedObject value;                                // constant
  std::shared_ptr<const Node> a, b;                  // tensor / dual
  std::vector<MatObject> parts;                      // coproduct
};

MatObject MatObject::family(std::vector<std::pair<Nat, GradedObject>> fibers) {
  std::sort(fibers.begin(), fibers.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t i = 1; i < fibers.size(); ++i) {
    if (fibers[i - 1].first == fibers[i].first) {
      throw Error("MatObject::family: duplicate index " + fibers[i].first.str());
    }
  }
  std::vector<Nat> idx;
  idx.reserve(fibers.size());
  for (const auto& [i, v] : fibers) {
    idx.push_back(i);
  }
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::family;
  n->set = IndexSet::finite(std::move(idx));
  n->fibers = std::move(fibers);
  return MatObject(std::move(n));
}

MatObject MatObject::singleton(const Nat& i, GradedObject v) {
  return family({{i, std::move(v)}});
}

MatObject MatObject::unit() { return singleton(Nat(0), GradedObject::unit()); }

MatObject MatObject::constant(IndexSet s, GradedObject v) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::constant;
  n->set = std::move(s);
  n->value = std::move(v);
  return MatObject(std::move(n));
}

MatObject MatObject::tensor(const MatObject& f, const MatObject& g) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::tensor;
  n->set = IndexSet::pair_image(f.index_set(), g.index_set());
  n->a = f.p_;
  n->b = g.p_;
  return MatObject(std::move(n));
}

MatObject MatObject::dual(const MatObject& f) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::dual;
  n->set = f.index_set();
  n->a = f.p_;
  return MatObject(std::move(n));
}

MatObject MatObject::hbar() {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::hbar;
  n->set = IndexSet::diag_image(IndexSet::all_naturals());
  return MatObject(std::move(n));
}

MatObject MatObject::coproduct_object(std::vector<MatObject> summands) {
  std::vector<Nat> all;
  for (const auto& s : summands) {
    if (!s.index_set().is_finite()) {
      throw Error("coproduct: summand index sets must be finite");
    }
    for (const Nat& i : s.index_set().enumerate_all()) {
      all.push_back(i);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw DisjointnessError("coproduct: summand index sets overlap");
  }
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::coproduct;
  n->set = IndexSet::finite(std::move(all));
  n->parts = std::move(summands);
  return MatObject(std::move(n));
}

const IndexSet& MatObject::index_set() const { return p_->set; }

GradedObject MatObject::fiber(const Nat& z) const {
  switch (p_->kind) {
    case ObjKind::family: {
      for (const auto& [i, v] : p_->fibers) {
        if (i == z) {
          return v;
        }
      }
      throw MembershipError("fiber: index " + z.str() +
                            " is not in the object's domain");
    }
    case ObjKind::constant: {
      if (!p_->set.member(z)) {
        throw MembershipError("fiber: index " + z.str() +
                              " is not in the object's domain");
      }
      return p_->value;
    }
    case ObjKind::tensor: {
      if (!p_->set.member(z)) {
        throw MembershipError("fiber: index " + z.str() +
                              " is not in the object's domain");
      }
      auto [x, y] = cantor_unpair(z);
      return matcat::tensor(MatObject(p_->a).fiber(x),
                            MatObject(p_->b).fiber(y));
    }
    case ObjKind::dual:
      return matcat::dual(MatObject(p_->a).fiber(z));
    case ObjKind::hbar: {
      auto [x, y] = cantor_unpair(z);
      if (x != y) {
        throw MembershipError("fiber: index " + z.str() +
                              " is not on the encoded diagonal");
      }
      const GradedObject h = decode_object(x);
      return matcat::tensor(matcat::dual(h), h);
    }
    case ObjKind::coproduct: {
      for (const auto& s : p_->parts) {
        if (s.index_set().member(z)) {
          return s.fiber(z);
        }
      }
      throw MembershipError("fiber: index " + z.str() +
                            " is not in any coproduct summand");
    }
  }
  throw Error("fiber: unreachable");
}

bool MatObject::operator==(const MatObject& o) const {
  if (p_ == o.p_) {
    return true;
  }
  if (p_->kind != o.p_->kind) {
    return false;
  }
  switch (p_->kind) {
    case ObjKind::family:
      return p_->fibers == o.p_->fibers;
    case ObjKind::constant:
      return p_->set == o.p_->set && p_->value == o.p_->value;
    case ObjKind::tensor:
      return MatObject(p_->a) == MatObject(o.p_->a) &&
             MatObject(p_->b) == MatObject(o.p_->b);
    case ObjKind::dual:
      return MatObject(p_->a) == MatObject(o.p_->a);
    case ObjKind::hbar:
      return true;
    case ObjKind::coproduct:
      return p_->parts == o.p_->parts;
  }
  return false;
}

}  // namespace matcat
