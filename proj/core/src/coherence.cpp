#include "matcat/coherence.hpp"

#include "matcat/errors.hpp"

namespace matcat {

namespace {
enum class WordKind { unit, leaf, node };
}

struct TensorWord::Node {
  WordKind kind;
  MatObject obj = MatObject::unit();  // leaf payload
  std::shared_ptr<const Node> l, r;
};

TensorWord TensorWord::unit() {
  auto n = std::make_shared<Node>();
  n->kind = WordKind::unit;
  return TensorWord(std::move(n));
}

TensorWord TensorWord::leaf(MatObject obj) {
  auto n = std::make_shared<Node>();
  n->kind = WordKind::leaf;
  n->obj = std::move(obj);
  return TensorWord(std::move(n));
}

TensorWord TensorWord::node(TensorWord left, TensorWord right) {
  auto n = std::make_shared<Node>();
  n->kind = WordKind::node;
  n->l = std::move(left.p_);
  n->r = std::move(right.p_);
  return TensorWord(std::move(n));
}

bool TensorWord::is_unit() const { return p_->kind == WordKind::unit; }
bool TensorWord::is_leaf() const { return p_->kind == WordKind::leaf; }
bool TensorWord::is_node() const { return p_->kind == WordKind::node; }

const MatObject& TensorWord::leaf_object() const {
  if (!is_leaf()) {
    throw Error("leaf_object: not a leaf");
  }
  return p_->obj;
}

TensorWord TensorWord::left() const { return TensorWord(p_->l); }
TensorWord TensorWord::right() const { return TensorWord(p_->r); }

MatObject TensorWord::realize() const {
  switch (p_->kind) {
    case WordKind::unit:
      return MatObject::unit();
    case WordKind::leaf:
      return p_->obj;
    case WordKind::node:
      return MatObject::tensor(left().realize(), right().realize());
  }
  throw Error("realize: unreachable");
}

std::vector<MatObject> TensorWord::frontier() const {
  std::vector<MatObject> out;
  const auto walk = [&out](auto&& self, const TensorWord& w) -> void {
    if (w.is_leaf()) {
      out.push_back(w.leaf_object());
    } else if (w.is_node()) {
      self(self, w.left());
      self(self, w.right());
    }
  };
  walk(walk, *this);
  return out;
}

std::size_t TensorWord::leaf_count() const { return frontier().size(); }

WordShape TensorWord::shape() const {
  switch (p_->kind) {
    case WordKind::unit:
      return WordShape::leaf(IndexSet::singleton(Nat(0)));
    case WordKind::leaf:
      return WordShape::leaf(p_->obj.index_set());
    case WordKind::node:
      return WordShape::node(left().shape(), right().shape());
  }
  throw Error("shape: unreachable");
}

bool TensorWord::operator==(const TensorWord& o) const {
  if (p_ == o.p_) {
    return true;
  }
  if (p_->kind != o.p_->kind) {
    return false;
  }
  switch (p_->kind) {
    case WordKind::unit:
      return true;
    case WordKind::leaf:
      return p_->obj == o.p_->obj;
    case WordKind::node:
      return left() == o.left() && right() == o.right();
  }
  return false;
}

namespace {

void require_realizes(const TensorWord& w, const MatObject& obj,
                      const char* what) {
  const MatObject r = w.realize();
  if (r == obj || same_index_set(r.index_set(), obj.index_set())) {
    return;
  }
  throw DomainMismatchError(std::string(what) +
                            ": word does not realize the morphism's endpoint");
}

}  // namespace

TypedMor::TypedMor(TensorWord dom, TensorWord cod, MatMorphism m)
    : dom_word(std::move(dom)), cod_word(std::move(cod)), mor(std::move(m)) {
  require_realizes(dom_word, mor.dom(), "TypedMor");
  require_realizes(cod_word, mor.cod(), "TypedMor");
}

TypedMor typed_id(const TensorWord& w) {
  return TypedMor(w, w, mat_id(w.realize()));
}

TypedMor typed_compose(const TypedMor& g, const TypedMor& f) {
  if (!(g.dom_word == f.cod_word)) {
    throw DomainMismatchError("typed_compose: words do not match");
  }
  return TypedMor(f.dom_word, g.cod_word, mat_compose(g.mor, f.mor));
}

TypedMor typed_tensor(const TypedMor& f, const TypedMor& g) {
  return TypedMor(TensorWord::node(f.dom_word, g.dom_word),
                  TensorWord::node(f.cod_word, g.cod_word),
                  mat_tensor(f.mor, g.mor));
}

namespace {

// Invertible coherence step with both directions materialized.
struct WIso {
  TensorWord from;
  TensorWord to;
  MatMorphism fwd;
  MatMorphism bwd;
};

WIso iso_id(const TensorWord& w) {
  MatMorphism id = mat_id(w.realize());
  return {w, w, id, id};
}

WIso iso_then(const WIso& first, const WIso& second) {
  return {first.from, second.to, mat_compose(second.fwd, first.fwd),
          mat_compose(first.bwd, second.bwd)};
}

WIso iso_tensor(const WIso& a, const WIso& b) {
  return {TensorWord::node(a.from, b.from), TensorWord::node(a.to, b.to),
          mat_tensor(a.fwd, b.fwd), mat_tensor(a.bwd, b.bwd)};
}

// node(unit, w) -> w  via the left unit.
WIso iso_strip_left_unit(const TensorWord& w) {
  const MatObject f = w.realize();
  return {TensorWord::node(TensorWord::unit(), w), w,
          mat_unit(f, UnitSide::left, Dir::forward),
          mat_unit(f, UnitSide::left, Dir::inverse)};
}

// node(w, unit) -> w  via the right unit.
WIso iso_strip_right_unit(const TensorWord& w) {
  const MatObject f = w.realize();
  return {TensorWord::node(w, TensorWord::unit()), w,
          mat_unit(f, UnitSide::right, Dir::forward),
          mat_unit(f, UnitSide::right, Dir::inverse)};
}

// node(a, node(b, c)) -> node(node(a, b), c).
WIso iso_rotate_left(const TensorWord& a, const TensorWord& b,
                     const TensorWord& c) {
  const MatObject fa = a.realize(), fb = b.realize(), fc = c.realize();
  return {TensorWord::node(a, TensorWord::node(b, c)),
          TensorWord::node(TensorWord::node(a, b), c),
          mat_assoc(fa, fb, fc, Dir::inverse),
          mat_assoc(fa, fb, fc, Dir::forward)};
}

// Removes every unit leaf; the result is unit-free, or the bare unit word
// when the frontier is empty.
WIso strip_units(const TensorWord& w) {
  if (!w.is_node()) {
    return iso_id(w);
  }
  const WIso l = strip_units(w.left());
  const WIso r = strip_units(w.right());
  WIso both = iso_tensor(l, r);
  both.from = w;  // the tensor rebuilds the same node shape
  if (both.to.left().is_unit()) {
    return iso_then(both, iso_strip_left_unit(both.to.right()));
  }
  if (both.to.right().is_unit()) {
    return iso_then(both, iso_strip_right_unit(both.to.left()));
  }
  return both;
}

// Appends the comb word w to the comb word acc, rotating associators.
WIso attach(const TensorWord& acc, const TensorWord& w) {
  if (!w.is_node()) {
    return iso_id(TensorWord::node(acc, w));
  }
  const WIso rot = iso_rotate_left(acc, w.left(), w.right());
  const WIso inner = attach(acc, w.left());
  return iso_then(rot, iso_tensor(inner, iso_id(w.right())));
}

// Unit-free word -> left comb over the same frontier.
WIso to_left_comb(const TensorWord& w) {
  if (!w.is_node()) {
    return iso_id(w);
  }
  const WIso l = to_left_comb(w.left());
  const WIso r = to_left_comb(w.right());
  WIso both = iso_tensor(l, r);
  both.from = w;
  return iso_then(both, attach(both.to.left(), both.to.right()));
}

WIso normalize(const TensorWord& w) {
  const WIso stripped = strip_units(w);
  return iso_then(stripped, to_left_comb(stripped.to));
}

bool same_frontier(const TensorWord& a, const TensorWord& b) {
  const auto fa = a.frontier();
  const auto fb = b.frontier();
  if (fa.size() != fb.size()) {
    return false;
  }
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (!(fa[i] == fb[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

TypedMor coherence_iso(const TensorWord& src, const TensorWord& dst) {
  if (!same_frontier(src, dst)) {
    throw NoCoherenceError(
        "coherence_iso: words have different non-unit frontiers");
  }
  const WIso ns = normalize(src);
  const WIso nd = normalize(dst);
  return TypedMor(src, dst, mat_compose(nd.bwd, ns.fwd));
}

bool doteq(const TypedMor& F, const TypedMor& G, std::span<const Nat> probes) {
  return doteq_diff(F, G, probes).empty();
}

std::string doteq_diff(const TypedMor& F, const TypedMor& G,
                       std::span<const Nat> probes) {
  const TypedMor X = coherence_iso(F.cod_word, G.cod_word);
  const TypedMor Y = coherence_iso(G.dom_word, F.dom_word);
  const MatMorphism lhs = mat_compose(X.mor, mat_compose(F.mor, Y.mor));
  return diff_on_rows(lhs, G.mor, probes);
}

}  // namespace matcat
