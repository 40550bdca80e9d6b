#include "matcat/encoding.hpp"

#include "matcat/errors.hpp"

namespace matcat {

Nat zigzag(Degree d) {
  return d >= 0 ? Nat(2 * d) : Nat(-2 * d - 1);
}

Degree unzigzag(const Nat& n) {
  const Nat half = n / 2;
  const long h = half.convert_to<long>();
  return (n % 2 == 0) ? h : -h - 1;
}

Nat encode_object(const GradedObject& a) {
  Nat acc = 0;
  const auto& slots = a.slots();
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    acc = 1 + cantor_pair(zigzag(*it), acc);
  }
  return acc;
}

GradedObject decode_object(const Nat& n) {
  std::vector<Degree> slots;
  Nat cur = n;
  while (cur != 0) {
    auto [zd, rest] = cantor_unpair(cur - 1);
    slots.push_back(unzigzag(zd));
    cur = rest;
  }
  return GradedObject::from_slots(std::move(slots));
}

const Nat& encoding_unit_index() {
  static const Nat x0 = encode_object(GradedObject::unit());
  return x0;
}

Nat chi(const Nat& x, const Nat& y) {
  return encode_object(tensor(decode_object(x), decode_object(y)));
}

}  // namespace matcat
