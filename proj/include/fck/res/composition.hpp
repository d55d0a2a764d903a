#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fck/core.hpp"
#include "fck/res/nuclide.hpp"

namespace fck {

// Mass fractions by nuclide. Entries are strictly positive and sum to one
// for any interned composition.
using FractionMap = std::map<NuclideId, double>;

// Scales an arbitrary positive map to unit sum. Drops exact zeros; rejects
// empty maps and negative or non-finite entries.
FractionMap normalized(const FractionMap& raw);

class DecayEngine;

// Interning store for compositions plus the decay cache. Compositions are
// immutable once created; equal fraction maps always yield the same id.
//
// Single writer (the simulation thread); safe to read concurrently once runs
// finish.
class CompositionRegistry {
 public:
  // Interns a map that is already normalized. Sums off by more than 1e-12
  // are renormalized and reported through on_warning; off by 1e-6 or more is
  // an error (public callers normalize first).
  CompId intern(const FractionMap& fractions);

  const FractionMap& fractions(CompId id) const;
  std::size_t size() const { return comps_.size(); }

  // Decays a composition by dt months, reusing previously computed cache
  // edges and appending only the uncovered tail. Equal (id, dt) pairs always
  // return the identical id.
  CompId decay(CompId id, int dt_months, const DecayEngine& engine);

  // Invoked once per newly interned composition.
  std::function<void(CompId, const FractionMap&)> on_interned;
  std::function<void(const std::string&)> on_warning;

 private:
  struct Node {
    FractionMap fractions;
    std::map<int, CompId> decayed;  // dt months -> child
  };
  std::vector<Node> comps_;
  std::map<FractionMap, CompId> interned_;
};

}  // namespace fck
