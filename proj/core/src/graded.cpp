#include "matcat/graded.hpp"

#include <functional>
#include <sstream>

#include "matcat/errors.hpp"

namespace matcat {

GradedObject::GradedObject(std::vector<Degree> slots)
    : slots_(std::move(slots)) {
  index();
}

void GradedObject::index() {
  rank_.resize(slots_.size());
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    auto& grp = by_degree_[slots_[i]];
    rank_[i] = grp.size();
    grp.push_back(i);
  }
}

GradedObject GradedObject::unit() { return GradedObject({0}); }

GradedObject GradedObject::from_grades(const std::map<Degree, int>& dims) {
  std::vector<Degree> slots;
  for (const auto& [d, n] : dims) {
    if (n < 1) {
      throw Error("GradedObject: stored dimension must be >= 1");
    }
    slots.insert(slots.end(), static_cast<std::size_t>(n), d);
  }
  return GradedObject(std::move(slots));
}

GradedObject GradedObject::from_slots(std::vector<Degree> slots) {
  return GradedObject(std::move(slots));
}

GradedObject GradedObject::line(Degree d, int dim) {
  if (dim < 1) {
    throw Error("GradedObject: stored dimension must be >= 1");
  }
  return GradedObject(std::vector<Degree>(static_cast<std::size_t>(dim), d));
}

int GradedObject::dim(Degree d) const {
  auto it = by_degree_.find(d);
  return it == by_degree_.end() ? 0 : static_cast<int>(it->second.size());
}

std::map<Degree, int> GradedObject::grades() const {
  std::map<Degree, int> g;
  for (const auto& [d, ps] : by_degree_) {
    g[d] = static_cast<int>(ps.size());
  }
  return g;
}

std::span<const std::size_t> GradedObject::positions(Degree d) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = by_degree_.find(d);
  return it == by_degree_.end() ? std::span<const std::size_t>(kEmpty)
                                : std::span<const std::size_t>(it->second);
}

std::string GradedObject::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, n] : grades()) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << d << ":" << n;
  }
  os << "}";
  return os.str();
}

GradedObject tensor(const GradedObject& a, const GradedObject& b) {
  std::vector<Degree> slots;
  slots.reserve(a.total_dim() * b.total_dim());
  for (Degree da : a.slots()) {
    for (Degree db : b.slots()) {
      slots.push_back(da + db);
    }
  }
  return GradedObject::from_slots(std::move(slots));
}

GradedObject dual(const GradedObject& a) {
  std::vector<Degree> slots;
  slots.reserve(a.total_dim());
  for (Degree d : a.slots()) {
    slots.push_back(-d);
  }
  return GradedObject::from_slots(std::move(slots));
}

GradedMorphism::GradedMorphism(GradedObject src, GradedObject dst,
                               std::map<Degree, Matrix> blocks)
    : src_(std::move(src)), dst_(std::move(dst)) {
  for (auto& [d, m] : blocks) {
    const auto r = dst_.positions(d).size();
    const auto c = src_.positions(d).size();
    if (m.rows() != r || m.cols() != c) {
      throw ShapeMismatchError("block at degree " + std::to_string(d) +
                               " has shape " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + ", expected " +
                               std::to_string(r) + "x" + std::to_string(c));
    }
    if (!m.is_zero()) {
      blocks_.emplace(d, std::move(m));
    }
  }
}

GradedMorphism GradedMorphism::zero(GradedObject src, GradedObject dst) {
  return GradedMorphism(std::move(src), std::move(dst), {});
}

GradedMorphism GradedMorphism::identity(const GradedObject& a) {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : a.grades()) {
    blocks.emplace(d, Matrix::identity(static_cast<std::size_t>(n)));
  }
  return GradedMorphism(a, a, std::move(blocks));
}

Matrix GradedMorphism::block(Degree d) const {
  auto it = blocks_.find(d);
  if (it != blocks_.end()) {
    return it->second;
  }
  return Matrix(dst_.positions(d).size(), src_.positions(d).size());
}

const Matrix* GradedMorphism::block_ptr(Degree d) const {
  auto it = blocks_.find(d);
  return it == blocks_.end() ? nullptr : &it->second;
}

bool GradedMorphism::is_identity() const {
  if (src_ != dst_) {
    return false;
  }
  for (const auto& [d, n] : src_.grades()) {
    if (!block(d).is_identity()) {
      return false;
    }
  }
  return true;
}

std::string GradedMorphism::to_string() const {
  std::ostringstream os;
  os << src_.to_string() << " -> " << dst_.to_string() << " {";
  bool first = true;
  for (const auto& [d, m] : blocks_) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << d << ": " << m.to_string();
  }
  os << "}";
  return os.str();
}

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.dst() != g.src()) {
    throw DomainMismatchError("compose: middle objects differ: " +
                              f.dst().to_string() + " vs " +
                              g.src().to_string());
  }
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, fm] : f.blocks()) {
    if (const Matrix* gm = g.block_ptr(d)) {
      blocks.emplace(d, (*gm) * fm);
    }
  }
  return GradedMorphism(f.src(), g.dst(), std::move(blocks));
}

GradedMorphism add(const GradedMorphism& f, const GradedMorphism& g) {
  if (f.src() != g.src() || f.dst() != g.dst()) {
    throw DomainMismatchError("add: endpoints differ");
  }
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, m] : f.blocks()) {
    blocks.emplace(d, m);
  }
  for (const auto& [d, m] : g.blocks()) {
    auto it = blocks.find(d);
    if (it == blocks.end()) {
      blocks.emplace(d, m);
    } else {
      it->second = it->second + m;
    }
  }
  return GradedMorphism(f.src(), f.dst(), std::move(blocks));
}

GradedMorphism negate(const GradedMorphism& f) { return scale(Rat(-1), f); }

GradedMorphism scale(const Rat& s, const GradedMorphism& f) {
  std::map<Degree, Matrix> blocks;
  if (s != 0) {
    for (const auto& [d, m] : f.blocks()) {
      blocks.emplace(d, s * m);
    }
  }
  return GradedMorphism(f.src(), f.dst(), std::move(blocks));
}

GradedMorphism tensor(const GradedMorphism& f, const GradedMorphism& g) {
  const GradedObject src = tensor(f.src(), g.src());
  const GradedObject dst = tensor(f.dst(), g.dst());
  const std::size_t ns = g.src().total_dim();
  const std::size_t nd = g.dst().total_dim();
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : dst.grades()) {
    auto rows = dst.positions(d);
    auto cols = src.positions(d);
    if (cols.empty()) {
      continue;
    }
    Matrix m(rows.size(), cols.size());
    bool nonzero = false;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      const std::size_t pr = rows[ri];
      const std::size_t ar = pr / nd, br = pr % nd;  // dst slot pair
      const Degree dfa = f.dst().slots()[ar];
      const Degree dgb = g.dst().slots()[br];
      const Matrix* fb = f.block_ptr(dfa);
      const Matrix* gb = g.block_ptr(dgb);
      if (!fb || !gb) {
        continue;
      }
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const std::size_t pc = cols[ci];
        const std::size_t ac = pc / ns, bc = pc % ns;  // src slot pair
        if (f.src().slots()[ac] != dfa || g.src().slots()[bc] != dgb) {
          continue;  // morphisms preserve degree
        }
        const Rat& fv = fb->at(f.dst().rank(ar), f.src().rank(ac));
        if (fv == 0) {
          continue;
        }
        const Rat& gv = gb->at(g.dst().rank(br), g.src().rank(bc));
        if (gv == 0) {
          continue;
        }
        m.at(ri, ci) = fv * gv;
        nonzero = true;
      }
    }
    if (nonzero) {
      blocks.emplace(d, std::move(m));
    }
  }
  return GradedMorphism(src, dst, std::move(blocks));
}

GradedMorphism tensor_many(std::span<const GradedMorphism> fs) {
  if (fs.empty()) {
    return GradedMorphism::identity(GradedObject::unit());
  }
  GradedMorphism acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = tensor(acc, fs[i]);
  }
  return acc;
}

GradedMorphism dual_transpose(const GradedMorphism& f) {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, m] : f.blocks()) {
    blocks.emplace(-d, m.transpose());
  }
  return GradedMorphism(dual(f.dst()), dual(f.src()), std::move(blocks));
}

GradedMorphism eval_morphism(const GradedObject& a) {
  const GradedObject src = tensor(dual(a), a);
  const std::size_t n = a.total_dim();
  auto cols = src.positions(0);
  Matrix m(1, cols.size());
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    const std::size_t p = cols[ci];
    if (p / n == p % n) {
      m.at(0, ci) = 1;
    }
  }
  std::map<Degree, Matrix> blocks;
  blocks.emplace(0, std::move(m));
  return GradedMorphism(src, GradedObject::unit(), std::move(blocks));
}

GradedMorphism coev_morphism(const GradedObject& a) {
  const GradedObject dst = tensor(a, dual(a));
  const std::size_t n = a.total_dim();
  auto rows = dst.positions(0);
  Matrix m(rows.size(), 1);
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const std::size_t p = rows[ri];
    if (p / n == p % n) {
      m.at(ri, 0) = 1;
    }
  }
  std::map<Degree, Matrix> blocks;
  blocks.emplace(0, std::move(m));
  return GradedMorphism(GradedObject::unit(), dst, std::move(blocks));
}

void BaseCategory::validate() const {
  if (q == 0) {
    throw UsageError("base category: q must be nonzero");
  }
}

Rat BaseCategory::braid_factor(Degree m, Degree n) const {
  if (instance == Instance::symmetric) {
    return Rat(1);
  }
  return pow_rat(q, m * n);
}

Rat BaseCategory::twist_factor(Degree m) const {
  if (instance == Instance::symmetric) {
    return Rat(1);
  }
  return pow_rat(q, m * m);
}

namespace {

// Shared shape of c_{a,b} and its inverse: slot pair (alpha, beta) of the
// source maps to (beta, alpha) of the target with the given scalar.
GradedMorphism flip_morphism(const GradedObject& left,
                             const GradedObject& right, const GradedObject& src,
                             const GradedObject& dst,
                             const std::function<Rat(Degree, Degree)>& factor) {
  const std::size_t nl = left.total_dim();
  const std::size_t nr = right.total_dim();
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : src.grades()) {
    auto cols = src.positions(d);
    auto rows = dst.positions(d);
    Matrix m(rows.size(), cols.size());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const std::size_t p = cols[ci];
      const std::size_t i = p / nr, j = p % nr;  // src = left (x) right
      const std::size_t pd = j * nl + i;         // dst = right (x) left
      const Degree dm = left.slots()[i], dn = right.slots()[j];
      m.at(dst.rank(pd), ci) = factor(dm, dn);
    }
    if (!m.is_zero()) {
      blocks.emplace(d, std::move(m));
    }
  }
  return GradedMorphism(src, dst, std::move(blocks));
}

}  // namespace

GradedMorphism BaseCategory::braid(const GradedObject& a,
                                   const GradedObject& b) const {
  return flip_morphism(a, b, tensor(a, b), tensor(b, a),
                       [this](Degree m, Degree n) { return braid_factor(m, n); });
}

GradedMorphism BaseCategory::braid_inverse(const GradedObject& a,
                                           const GradedObject& b) const {
  // Inverse of braid(a, b): sends slot (beta, alpha) of b (x) a back to
  // (alpha, beta) with the reciprocal scalar.
  return flip_morphism(b, a, tensor(b, a), tensor(a, b),
                       [this](Degree n, Degree m) {
                         return Rat(1) / braid_factor(m, n);
                       });
}

GradedMorphism BaseCategory::twist(const GradedObject& a) const {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : a.grades()) {
    blocks.emplace(d, twist_factor(d) *
                          Matrix::identity(static_cast<std::size_t>(n)));
  }
  return GradedMorphism(a, a, std::move(blocks));
}

GradedMorphism BaseCategory::twist_inverse(const GradedObject& a) const {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : a.grades()) {
    blocks.emplace(d, (Rat(1) / twist_factor(d)) *
                          Matrix::identity(static_cast<std::size_t>(n)));
  }
  return GradedMorphism(a, a, std::move(blocks));
}

}  // namespace matcat
