#include "matcat/index_space.hpp"

#include <algorithm>

#include "matcat/errors.hpp"

namespace matcat {

Nat cantor_pair(const Nat& x, const Nat& y) {
  const Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  const Nat s = (isqrt(8 * z + 1) - 1) / 2;
  const Nat y = z - s * (s + 1) / 2;
  return {s - y, y};
}

struct IndexSet::Node {
  SetKind kind;
  Nat value;                // singleton
  std::vector<Nat> elems;   // finite, sorted unique
  std::shared_ptr<const Node> a, b;
};

IndexSet IndexSet::empty() {
  auto n = std::make_shared<Node>();
  n->kind = SetKind::empty;
  return IndexSet(std::move(n));
}

IndexSet IndexSet::singleton(const Nat& i) {
  auto n = std::make_shared<Node>();
  n->kind = SetKind::singleton;
  n->value = i;
  return IndexSet(std::move(n));
}

IndexSet IndexSet::finite(std::vector<Nat> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto n = std::make_shared<Node>();
  n->kind = SetKind::finite;
  n->elems = std::move(elems);
  return IndexSet(std::move(n));
}

IndexSet IndexSet::all_naturals() {
  auto n = std::make_shared<Node>();
  n->kind = SetKind::all;
  return IndexSet(std::move(n));
}

IndexSet IndexSet::pair_image(IndexSet a, IndexSet b) {
  auto n = std::make_shared<Node>();
  n->kind = SetKind::pair_image;
  n->a = std::move(a.p_);
  n->b = std::move(b.p_);
  return IndexSet(std::move(n));
}

IndexSet IndexSet::diag_image(IndexSet a) {
  auto n = std::make_shared<Node>();
  n->kind = SetKind::diag_image;
  n->a = std::move(a.p_);
  return IndexSet(std::move(n));
}

SetKind IndexSet::kind() const { return p_->kind; }

bool IndexSet::member(const Nat& i) const {
  switch (p_->kind) {
    case SetKind::empty:
      return false;
    case SetKind::singleton:
      return i == p_->value;
    case SetKind::finite:
      return std::binary_search(p_->elems.begin(), p_->elems.end(), i);
    case SetKind::all:
      return true;
    case SetKind::pair_image: {
      auto [x, y] = cantor_unpair(i);
      return IndexSet(p_->a).member(x) && IndexSet(p_->b).member(y);
    }
    case SetKind::diag_image: {
      auto [x, y] = cantor_unpair(i);
      return x == y && IndexSet(p_->a).member(x);
    }
  }
  return false;
}

bool IndexSet::is_empty() const {
  switch (p_->kind) {
    case SetKind::empty:
      return true;
    case SetKind::singleton:
    case SetKind::all:
      return false;
    case SetKind::finite:
      return p_->elems.empty();
    case SetKind::pair_image:
      return IndexSet(p_->a).is_empty() || IndexSet(p_->b).is_empty();
    case SetKind::diag_image:
      return IndexSet(p_->a).is_empty();
  }
  return false;
}

bool IndexSet::is_finite() const {
  switch (p_->kind) {
    case SetKind::empty:
    case SetKind::singleton:
    case SetKind::finite:
      return true;
    case SetKind::all:
      return false;
    case SetKind::pair_image: {
      IndexSet a(p_->a), b(p_->b);
      if (a.is_empty() || b.is_empty()) {
        return true;
      }
      return a.is_finite() && b.is_finite();
    }
    case SetKind::diag_image:
      return IndexSet(p_->a).is_finite();
  }
  return false;
}

std::vector<Nat> IndexSet::enumerate_upto(std::size_t n) const {
  std::vector<Nat> out;
  if (n == 0) {
    return out;
  }
  switch (p_->kind) {
    case SetKind::empty:
      return out;
    case SetKind::singleton:
      out.push_back(p_->value);
      return out;
    case SetKind::finite: {
      const std::size_t k = std::min(n, p_->elems.size());
      out.assign(p_->elems.begin(), p_->elems.begin() + k);
      return out;
    }
    case SetKind::all: {
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(Nat(i));
      }
      return out;
    }
    case SetKind::diag_image: {
      for (const Nat& x : IndexSet(p_->a).enumerate_upto(n)) {
        out.push_back(cantor_pair(x, x));  // monotone in x
      }
      return out;
    }
    case SetKind::pair_image: {
      IndexSet a(p_->a), b(p_->b);
      if (a.is_empty() || b.is_empty()) {
        return out;
      }
      const bool fa = a.is_finite(), fb = b.is_finite();
      if (fa && fb) {
        for (const Nat& x : a.enumerate_all()) {
          for (const Nat& y : b.enumerate_all()) {
            out.push_back(cantor_pair(x, y));
          }
        }
        std::sort(out.begin(), out.end());
        if (out.size() > n) {
          out.resize(n);
        }
        return out;
      }
      if (fa || fb) {
        // One finite side: the n smallest pairs lie among the n smallest of
        // the infinite side crossed with the whole finite side, since the
        // pairing is monotone in each argument.
        const auto xs = fa ? a.enumerate_all() : a.enumerate_upto(n);
        const auto ys = fb ? b.enumerate_all() : b.enumerate_upto(n);
        for (const Nat& x : xs) {
          for (const Nat& y : ys) {
            out.push_back(cantor_pair(x, y));
          }
        }
        std::sort(out.begin(), out.end());
        if (out.size() > n) {
          out.resize(n);
        }
        return out;
      }
      // Both infinite: scan anti-diagonals; pair values ascend along the scan.
      for (Nat s = 0; out.size() < n; ++s) {
        for (Nat y = 0; y <= s; ++y) {
          if (b.member(y) && a.member(s - y)) {
            out.push_back(cantor_pair(s - y, y));
            if (out.size() == n) {
              break;
            }
          }
        }
      }
      return out;
    }
  }
  return out;
}

std::vector<Nat> IndexSet::enumerate_all() const {
  if (!is_finite()) {
    throw Error("enumerate_all: index set is infinite");
  }
  switch (p_->kind) {
    case SetKind::empty:
      return {};
    case SetKind::singleton:
      return {p_->value};
    case SetKind::finite:
      return p_->elems;
    case SetKind::all:
      break;  // unreachable, not finite
    case SetKind::pair_image: {
      IndexSet a(p_->a), b(p_->b);
      if (a.is_empty() || b.is_empty()) {
        return {};
      }
      std::vector<Nat> out;
      for (const Nat& x : a.enumerate_all()) {
        for (const Nat& y : b.enumerate_all()) {
          out.push_back(cantor_pair(x, y));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case SetKind::diag_image: {
      std::vector<Nat> out;
      for (const Nat& x : IndexSet(p_->a).enumerate_all()) {
        out.push_back(cantor_pair(x, x));
      }
      return out;
    }
  }
  return {};
}

bool IndexSet::operator==(const IndexSet& o) const {
  if (p_ == o.p_) {
    return true;
  }
  if (p_->kind != o.p_->kind) {
    return false;
  }
  switch (p_->kind) {
    case SetKind::empty:
    case SetKind::all:
      return true;
    case SetKind::singleton:
      return p_->value == o.p_->value;
    case SetKind::finite:
      return p_->elems == o.p_->elems;
    case SetKind::pair_image:
      return IndexSet(p_->a) == IndexSet(o.p_->a) &&
             IndexSet(p_->b) == IndexSet(o.p_->b);
    case SetKind::diag_image:
      return IndexSet(p_->a) == IndexSet(o.p_->a);
  }
  return false;
}

bool same_index_set(const IndexSet& a, const IndexSet& b) {
  if (a == b) {
    return true;
  }
  if (a.is_finite() && b.is_finite()) {
    return a.enumerate_all() == b.enumerate_all();
  }
  return false;
}

struct WordShape::Node {
  bool leaf;
  IndexSet set = IndexSet::empty();
  std::shared_ptr<const Node> l, r;
};

WordShape WordShape::leaf(IndexSet s) {
  auto n = std::make_shared<Node>();
  n->leaf = true;
  n->set = std::move(s);
  return WordShape(std::move(n));
}

WordShape WordShape::node(WordShape left, WordShape right) {
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->l = std::move(left.p_);
  n->r = std::move(right.p_);
  return WordShape(std::move(n));
}

bool WordShape::is_leaf() const { return p_->leaf; }
const IndexSet& WordShape::leaf_set() const { return p_->set; }
WordShape WordShape::left() const { return WordShape(p_->l); }
WordShape WordShape::right() const { return WordShape(p_->r); }

namespace {

void decode_rec(const Nat& z, const WordShape& shape, std::vector<Nat>& out) {
  if (shape.is_leaf()) {
    if (!shape.leaf_set().member(z)) {
      throw MembershipError("decode_word_index: component " + z.str() +
                            " is not a member of its leaf index set");
    }
    out.push_back(z);
    return;
  }
  auto [x, y] = cantor_unpair(z);
  decode_rec(x, shape.left(), out);
  decode_rec(y, shape.right(), out);
}

}  // namespace

std::vector<Nat> decode_word_index(const Nat& z, const WordShape& shape) {
  std::vector<Nat> out;
  decode_rec(z, shape, out);
  return out;
}

}  // namespace matcat
