#include "fck/res/composition.hpp"

#include <cmath>

#include "fck/res/decay.hpp"

namespace fck {

FractionMap normalized(const FractionMap& raw) {
  double sum = 0.0;
  for (const auto& [nuc, frac] : raw) {
    if (!std::isfinite(frac) || frac < 0) {
      throw ValidationError("composition fraction for " + nuclide_name(nuc) +
                            " must be finite and nonnegative");
    }
    if (!nuc.valid()) {
      throw ValidationError("bad nuclide id " + std::to_string(nuc.raw));
    }
    sum += frac;
  }
  if (!(sum > 0)) throw ValidationError("composition has no positive fractions");
  FractionMap out;
  for (const auto& [nuc, frac] : raw) {
    if (frac > 0) out[nuc] = frac / sum;
  }
  return out;
}

CompId CompositionRegistry::intern(const FractionMap& fractions) {
  double sum = 0.0;
  for (const auto& [nuc, frac] : fractions) sum += frac;
  const FractionMap* key = &fractions;
  FractionMap scaled;
  if (std::abs(sum - 1.0) > 1e-12) {
    if (std::abs(sum - 1.0) >= 1e-6) {
      throw ValidationError("composition sum " + std::to_string(sum) +
                            " too far from 1 to intern");
    }
    scaled = normalized(fractions);
    if (on_warning) {
      on_warning("composition renormalized; sum was off by " +
                 std::to_string(sum - 1.0));
    }
    key = &scaled;
  }
  auto it = interned_.find(*key);
  if (it != interned_.end()) return it->second;
  CompId id{static_cast<std::int32_t>(comps_.size())};
  comps_.push_back({*key, {}});
  interned_.emplace(*key, id);
  if (on_interned) on_interned(id, comps_.back().fractions);
  return id;
}

const FractionMap& CompositionRegistry::fractions(CompId id) const {
  if (!id.valid() || static_cast<std::size_t>(id.value) >= comps_.size()) {
    throw std::out_of_range("bad composition id");
  }
  return comps_[id.value].fractions;
}

CompId CompositionRegistry::decay(CompId id, int dt_months,
                                  const DecayEngine& engine) {
  if (dt_months < 0) throw ValidationError("decay interval must be >= 0");
  CompId cur = id;
  int remaining = dt_months;
  while (remaining > 0) {
    auto& edges = comps_[cur.value].decayed;
    // Largest cached edge that fits the remaining interval.
    auto it = edges.upper_bound(remaining);
    if (it != edges.begin()) {
      --it;
      remaining -= it->first;
      cur = it->second;
      continue;
    }
    CompId child = intern(engine.decay(comps_[cur.value].fractions,
                                       static_cast<double>(remaining)));
    comps_[cur.value].decayed.emplace(remaining, child);
    cur = child;
    remaining = 0;
  }
  return cur;
}

}  // namespace fck
