#include "matcat/mat_morphism.hpp"

#include <sstream>

#include "matcat/errors.hpp"

namespace matcat {

namespace {

void require_same(const MatObject& a, const MatObject& b, const char* what) {
  if (a == b) {
    return;
  }
  // Endpoints may be represented by different construction trees; they are
  // interchangeable when their index sets agree extensionally. Fibers are
  // checked entrywise by the base layer.
  if (!same_index_set(a.index_set(), b.index_set())) {
    throw DomainMismatchError(std::string(what) + ": objects differ");
  }
}

void put(MatRow& row, const Nat& y, GradedMorphism m) {
  if (m.is_zero()) {
    return;
  }
  auto it = row.find(y);
  if (it == row.end()) {
    row.emplace(y, std::move(m));
  } else {
    GradedMorphism s = add(it->second, m);
    if (s.is_zero()) {
      row.erase(it);
    } else {
      it->second = std::move(s);
    }
  }
}

}  // namespace

MatMorphism::MatMorphism(MatObject dom, MatObject cod,
                         std::function<MatRow(const Nat&)> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {}

MatRow MatMorphism::row(const Nat& x) const {
  if (!dom_.index_set().member(x)) {
    throw MembershipError("row: index " + x.str() +
                          " is not in the domain's index set");
  }
  return rows_(x);
}

MatMorphism mat_id(const MatObject& f) {
  return MatMorphism(f, f, [f](const Nat& x) {
    MatRow row;
    put(row, x, GradedMorphism::identity(f.fiber(x)));
    return row;
  });
}

MatMorphism mat_zero(const MatObject& f, const MatObject& g) {
  return MatMorphism(f, g, [](const Nat&) { return MatRow{}; });
}

MatMorphism mat_add(const MatMorphism& F, const MatMorphism& G) {
  require_same(F.dom(), G.dom(), "mat_add");
  require_same(F.cod(), G.cod(), "mat_add");
  return MatMorphism(F.dom(), F.cod(), [F, G](const Nat& x) {
    MatRow row = F.row(x);
    for (const auto& [y, m] : G.row(x)) {
      put(row, y, m);
    }
    return row;
  });
}

MatMorphism mat_negate(const MatMorphism& F) { return mat_scale(Rat(-1), F); }

MatMorphism mat_scale(const Rat& s, const MatMorphism& F) {
  return MatMorphism(F.dom(), F.cod(), [s, F](const Nat& x) {
    MatRow row;
    for (const auto& [y, m] : F.row(x)) {
      put(row, y, scale(s, m));
    }
    return row;
  });
}

MatMorphism mat_compose(const MatMorphism& G, const MatMorphism& F) {
  require_same(F.cod(), G.dom(), "mat_compose");
  return MatMorphism(F.dom(), G.cod(), [F, G](const Nat& x) {
    MatRow row;
    for (const auto& [z, fz] : F.row(x)) {
      for (const auto& [y, gy] : G.row(z)) {
        put(row, y, compose(gy, fz));
      }
    }
    return row;
  });
}

MatMorphism mat_tensor(const MatMorphism& F, const MatMorphism& G) {
  const MatObject dom = MatObject::tensor(F.dom(), G.dom());
  const MatObject cod = MatObject::tensor(F.cod(), G.cod());
  return MatMorphism(dom, cod, [F, G](const Nat& z) {
    auto [x, y] = cantor_unpair(z);
    MatRow row;
    const MatRow fr = F.row(x);
    const MatRow gr = G.row(y);
    for (const auto& [xp, fm] : fr) {
      for (const auto& [yp, gm] : gr) {
        put(row, cantor_pair(xp, yp), tensor(fm, gm));
      }
    }
    return row;
  });
}

MatMorphism mat_assoc(const MatObject& f, const MatObject& g,
                      const MatObject& h, Dir dir) {
  const MatObject left = MatObject::tensor(MatObject::tensor(f, g), h);
  const MatObject right = MatObject::tensor(f, MatObject::tensor(g, h));
  if (dir == Dir::forward) {
    return MatMorphism(left, right, [left](const Nat& v) {
      auto [xy, z] = cantor_unpair(v);
      auto [x, y] = cantor_unpair(xy);
      const Nat w = cantor_pair(x, cantor_pair(y, z));
      MatRow row;
      put(row, w, GradedMorphism::identity(left.fiber(v)));
      return row;
    });
  }
  return MatMorphism(right, left, [right](const Nat& w) {
    auto [x, yz] = cantor_unpair(w);
    auto [y, z] = cantor_unpair(yz);
    const Nat v = cantor_pair(cantor_pair(x, y), z);
    MatRow row;
    put(row, v, GradedMorphism::identity(right.fiber(w)));
    return row;
  });
}

MatMorphism mat_unit(const MatObject& f, UnitSide side, Dir dir) {
  const MatObject I = MatObject::unit();
  const MatObject padded = side == UnitSide::right ? MatObject::tensor(f, I)
                                                   : MatObject::tensor(I, f);
  if (dir == Dir::forward) {
    return MatMorphism(padded, f, [padded, side](const Nat& z) {
      auto [a, b] = cantor_unpair(z);
      const Nat& x = side == UnitSide::right ? a : b;
      MatRow row;
      put(row, x, GradedMorphism::identity(padded.fiber(z)));
      return row;
    });
  }
  return MatMorphism(f, padded, [f, side](const Nat& x) {
    const Nat z = side == UnitSide::right ? cantor_pair(x, Nat(0))
                                          : cantor_pair(Nat(0), x);
    MatRow row;
    put(row, z, GradedMorphism::identity(f.fiber(x)));
    return row;
  });
}

MatMorphism mat_braid(const BaseCategory& base, const MatObject& f,
                      const MatObject& g, Dir dir) {
  const MatObject fg = MatObject::tensor(f, g);
  const MatObject gf = MatObject::tensor(g, f);
  if (dir == Dir::forward) {
    return MatMorphism(fg, gf, [base, f, g](const Nat& v) {
      auto [x, y] = cantor_unpair(v);
      MatRow row;
      put(row, cantor_pair(y, x), base.braid(f.fiber(x), g.fiber(y)));
      return row;
    });
  }
  return MatMorphism(gf, fg, [base, f, g](const Nat& w) {
    auto [y, x] = cantor_unpair(w);
    MatRow row;
    put(row, cantor_pair(x, y), base.braid_inverse(f.fiber(x), g.fiber(y)));
    return row;
  });
}

MatMorphism mat_twist(const BaseCategory& base, const MatObject& f) {
  return MatMorphism(f, f, [base, f](const Nat& x) {
    MatRow row;
    put(row, x, base.twist(f.fiber(x)));
    return row;
  });
}

Coproduct coproduct(const std::vector<MatObject>& summands) {
  MatObject obj = MatObject::coproduct_object(summands);
  std::vector<MatMorphism> injections;
  injections.reserve(summands.size());
  for (const auto& s : summands) {
    injections.emplace_back(s, obj, [s](const Nat& x) {
      MatRow row;
      put(row, x, GradedMorphism::identity(s.fiber(x)));
      return row;
    });
  }
  return {std::move(obj), std::move(injections)};
}

MatMorphism copair(const std::vector<MatMorphism>& targets) {
  if (targets.empty()) {
    throw Error("copair: empty family");
  }
  const MatObject& cod = targets[0].cod();
  for (const auto& t : targets) {
    require_same(t.cod(), cod, "copair");
  }
  std::vector<MatObject> summands;
  summands.reserve(targets.size());
  for (const auto& t : targets) {
    summands.push_back(t.dom());
  }
  MatObject dom = MatObject::coproduct_object(std::move(summands));
  std::vector<MatMorphism> ts = targets;
  return MatMorphism(dom, cod, [ts](const Nat& t) {
    for (const auto& target : ts) {
      if (target.dom().index_set().member(t)) {
        return target.row(t);
      }
    }
    return MatRow{};
  });
}

MatObject embed_object(const GradedObject& v, const Nat& at) {
  return MatObject::singleton(at, v);
}

MatMorphism embed_morphism(const GradedMorphism& alpha, const Nat& from,
                           const Nat& to) {
  const MatObject dom = MatObject::singleton(from, alpha.src());
  const MatObject cod = MatObject::singleton(to, alpha.dst());
  return MatMorphism(dom, cod, [alpha, to](const Nat&) {
    MatRow row;
    put(row, to, alpha);
    return row;
  });
}

MatMorphism eval_sharp(const MatObject& f) {
  const MatObject dom = MatObject::tensor(MatObject::dual(f), f);
  return MatMorphism(dom, MatObject::unit(), [f](const Nat& v) {
    auto [xs, x] = cantor_unpair(v);
    MatRow row;
    if (xs == x) {
      put(row, Nat(0), eval_morphism(f.fiber(x)));
    }
    return row;
  });
}

MatMorphism coev_sharp(const MatObject& f) {
  if (!f.index_set().is_finite()) {
    throw DualityObstructionError(
        "coevaluation: the object has an infinite index set, so the row at "
        "the unit point would have infinite support");
  }
  const MatObject cod = MatObject::tensor(f, MatObject::dual(f));
  const std::vector<Nat> members = f.index_set().enumerate_all();
  return MatMorphism(MatObject::unit(), cod, [f, members](const Nat&) {
    MatRow row;
    for (const Nat& x : members) {
      put(row, cantor_pair(x, x), coev_morphism(f.fiber(x)));
    }
    return row;
  });
}

bool equal_on_rows(const MatMorphism& F, const MatMorphism& G,
                   std::span<const Nat> probes) {
  return diff_on_rows(F, G, probes).empty();
}

bool equal_on_rows(const MatMorphism& F, const MatMorphism& G) {
  if (!F.dom().index_set().is_finite()) {
    throw Error("equal_on_rows: exhaustive comparison needs a finite domain");
  }
  const std::vector<Nat> all = F.dom().index_set().enumerate_all();
  return equal_on_rows(F, G, all);
}

std::string diff_on_rows(const MatMorphism& F, const MatMorphism& G,
                         std::span<const Nat> probes) {
  require_same(F.dom(), G.dom(), "equal_on_rows");
  require_same(F.cod(), G.cod(), "equal_on_rows");
  for (const Nat& x : probes) {
    const MatRow fr = F.row(x);
    const MatRow gr = G.row(x);
    if (fr == gr) {
      continue;
    }
    std::ostringstream os;
    os << "row " << x << ": ";
    for (const auto& [y, m] : fr) {
      auto it = gr.find(y);
      if (it == gr.end()) {
        os << "entry at " << y << " present only on the left: "
           << m.to_string();
        return os.str();
      }
      if (!(it->second == m)) {
        os << "entry at " << y << " differs: " << m.to_string() << " vs "
           << it->second.to_string();
        return os.str();
      }
    }
    for (const auto& [y, m] : gr) {
      if (!fr.count(y)) {
        os << "entry at " << y << " present only on the right: "
           << m.to_string();
        return os.str();
      }
    }
    os << "rows differ";
    return os.str();
  }
  return "";
}

}  // namespace matcat
