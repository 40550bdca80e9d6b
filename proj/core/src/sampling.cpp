#include "matcat/sampling.hpp"

#include <algorithm>
#include <set>

#include "matcat/encoding.hpp"

namespace matcat {

GradedObject sample_object(Rng& rng, const SampleBounds& b) {
  const std::size_t max_support =
      b.max_support > 0 ? static_cast<std::size_t>(b.max_support) : 1;
  const std::size_t max_dim =
      b.max_dim > 0 ? static_cast<std::size_t>(b.max_dim) : 1;
  const std::size_t support = 1 + rng.uniform(max_support);
  std::map<Degree, int> dims;
  for (std::size_t i = 0; i < support; ++i) {
    const Degree d = rng.range(-b.max_degree, b.max_degree);
    const int n = 1 + static_cast<int>(rng.uniform(max_dim));
    dims[d] = n;
  }
  return GradedObject::from_grades(dims);
}

GradedObject sample_small_object(Rng& rng, const SampleBounds& b,
                                 int max_total_dim) {
  const long dim_cap = b.max_dim > 0 ? b.max_dim : 1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t n =
        1 + rng.uniform(static_cast<std::size_t>(max_total_dim));
    std::vector<Degree> slots;
    for (std::size_t i = 0; i < n; ++i) {
      slots.push_back(rng.range(-b.max_degree, b.max_degree));
    }
    std::sort(slots.begin(), slots.end());
    GradedObject obj = GradedObject::from_slots(std::move(slots));
    bool ok = true;
    for (const auto& [d, k] : obj.grades()) {
      if (k > dim_cap) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return obj;
    }
  }
  return GradedObject::line(rng.range(-b.max_degree, b.max_degree), 1);
}

namespace {

Rat small_scalar(Rng& rng) {
  static const int nums[] = {-2, -1, 1, 2, 3};
  static const int dens[] = {1, 1, 1, 2};
  return Rat(nums[rng.uniform(5)], dens[rng.uniform(4)]);
}

}  // namespace

GradedMorphism sample_morphism(Rng& rng, const GradedObject& src,
                               const GradedObject& dst) {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : src.grades()) {
    const int m = dst.dim(d);
    if (m == 0) {
      continue;
    }
    Matrix block(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        if (rng.chance(0.7)) {
          block.at(i, j) = small_scalar(rng);
        }
      }
    }
    if (!block.is_zero()) {
      blocks.emplace(d, std::move(block));
    }
  }
  return GradedMorphism(src, dst, std::move(blocks));
}

GradedMorphism sample_morphism_from(Rng& rng, const GradedObject& src,
                                    const SampleBounds& b) {
  // Bias the codomain toward sharing degrees with the source so the
  // morphism has a chance to be nonzero.
  GradedObject dst = rng.chance(0.5) ? src : sample_object(rng, b);
  return sample_morphism(rng, src, dst);
}

MatObject sample_finite_object(Rng& rng, const SampleBounds& b,
                               std::size_t size, unsigned long index_ceiling) {
  std::set<Nat> indices;
  const std::size_t want = 1 + rng.uniform(size);
  while (indices.size() < want) {
    indices.insert(Nat(rng.uniform(index_ceiling)));
  }
  std::vector<std::pair<Nat, GradedObject>> fibers;
  for (const Nat& i : indices) {
    fibers.emplace_back(i, sample_object(rng, b));
  }
  return MatObject::family(std::move(fibers));
}

MatMorphism sample_mat_morphism(Rng& rng, const MatObject& f,
                                const MatObject& g) {
  const std::vector<Nat> dom_idx = f.index_set().enumerate_all();
  const std::vector<Nat> cod_idx = g.index_set().enumerate_all();
  std::map<Nat, MatRow> rows;
  for (const Nat& x : dom_idx) {
    MatRow row;
    for (const Nat& y : cod_idx) {
      if (!rng.chance(0.7)) {
        continue;
      }
      GradedMorphism entry = sample_morphism(rng, f.fiber(x), g.fiber(y));
      if (!entry.is_zero()) {
        row.emplace(y, std::move(entry));
      }
    }
    rows.emplace(x, std::move(row));
  }
  return MatMorphism(f, g, [rows](const Nat& x) {
    auto it = rows.find(x);
    return it == rows.end() ? MatRow{} : it->second;
  });
}

namespace {

TensorWord bracket(Rng& rng, const std::vector<TensorWord>& parts,
                   std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    return parts[lo];
  }
  const std::size_t split = lo + 1 + rng.uniform(hi - lo - 1);
  return TensorWord::node(bracket(rng, parts, lo, split),
                          bracket(rng, parts, split, hi));
}

}  // namespace

TensorWord sample_word(Rng& rng, const std::vector<MatObject>& leaves,
                       double unit_prob) {
  std::vector<TensorWord> parts;
  if (rng.chance(unit_prob)) {
    parts.push_back(TensorWord::unit());
  }
  for (const auto& obj : leaves) {
    parts.push_back(TensorWord::leaf(obj));
    if (rng.chance(unit_prob)) {
      parts.push_back(TensorWord::unit());
    }
  }
  if (parts.empty()) {
    return TensorWord::unit();
  }
  return bracket(rng, parts, 0, parts.size());
}

std::vector<Nat> sample_encoding_probes(Rng& rng, const SampleBounds& b,
                                        std::size_t count) {
  std::vector<Nat> probes;
  probes.push_back(encoding_unit_index());
  std::size_t attempts = 0;
  const std::size_t max_attempts = 64 * (count + 1);
  while (probes.size() < count && attempts++ < max_attempts) {
    const Nat idx = encode_object(sample_small_object(rng, b, 2));
    if (std::find(probes.begin(), probes.end(), idx) == probes.end()) {
      probes.push_back(idx);
    }
  }
  return probes;
}

}  // namespace matcat
