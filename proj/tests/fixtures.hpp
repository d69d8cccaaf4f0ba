#pragma once

#include <map>
#include <memory>

#include "cyclo3/cyclo3.hpp"

namespace cyclo3::fx {

inline const FieldTower& tower(unsigned s) {
  static std::map<unsigned, std::unique_ptr<FieldTower>> cache;
  auto& slot = cache[s];
  if (!slot) slot = std::make_unique<FieldTower>(build_tower(s));
  return *slot;
}

inline const CyclotomicPartition& partition(unsigned s) {
  static std::map<unsigned, CyclotomicPartition> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, partition_by_psiD(tower(s))).first;
  return it->second;
}

inline const ClassContext& context(unsigned s, FieldLabel label) {
  static std::map<std::pair<unsigned, FieldLabel>, std::unique_ptr<ClassContext>> cache;
  auto& slot = cache[{s, label}];
  if (!slot) slot = std::make_unique<ClassContext>(class_context(tower(s), label, 2));
  return *slot;
}

/// Moves one residue from T1 into T2: sizes stay plausible but the fusion
/// is no longer a scheme.
inline CyclotomicPartition corrupted(const CyclotomicPartition& p) {
  CyclotomicPartition c = p;
  c.T2.push_back(c.T1.back());
  c.T1.pop_back();
  std::sort(c.T2.begin(), c.T2.end());
  return c;
}

}  // namespace cyclo3::fx
