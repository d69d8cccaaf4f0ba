// Prints P, the multiplicities and the classification flags of the three
// fusion schemes at s = 1.
#include <iostream>

#include "cyclo3/cyclo3.hpp"

int main() {
  using namespace cyclo3;
  const auto t = build_tower(1);
  const auto p = partition_by_psiD(t);
  for (auto [label, id] : {std::pair{FieldLabel::F, "thm1"}, {FieldLabel::G, "thm2i"}, {FieldLabel::H, "thm2ii"}}) {
    const auto rec = build_scheme_record(class_context(t, label), FusionPattern::from_partition(p), id, 1);
    std::cout << id << " on GF(2^" << t.field(label).degree() << ")\nP =\n" << rec.P << "\nmultiplicities:";
    for (const auto& m : rec.multiplicities) std::cout << ' ' << m;
    std::cout << "\nprimitive " << rec.flags.is_primitive << ", self-dual " << rec.flags.is_self_dual << "\n\n";
  }
}
