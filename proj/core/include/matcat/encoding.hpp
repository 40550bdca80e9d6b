#pragma once

#include "matcat/graded.hpp"
#include "matcat/index_space.hpp"

namespace matcat {

// The fixed injection h of base objects into the index space, realized as a
// total bijection between the naturals and basis-slot sequences: the empty
// sequence (the zero object) maps to 0 and a nonempty sequence [d, rest]
// maps to 1 + pair(zigzag(d), encode(rest)). Its image is all of the
// naturals, hence closed under tensor, and decode(chi(x, y)) equals
// decode(x) (x) decode(y) on the nose.

Nat zigzag(Degree d);
Degree unzigzag(const Nat& n);

Nat encode_object(const GradedObject& a);
GradedObject decode_object(const Nat& n);

/// The unique index with decode_object == unit.
const Nat& encoding_unit_index();  // = 1

/// Multiplication table on indices: decode(chi(x, y)) = decode(x) (x) decode(y).
Nat chi(const Nat& x, const Nat& y);

}  // namespace matcat
