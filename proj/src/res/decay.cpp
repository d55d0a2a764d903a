#include "fck/res/decay.hpp"

#include <cmath>

namespace fck {

namespace {

struct PathSink {
  std::vector<NuclideId> ends;
  std::vector<double> branches;
  std::vector<std::vector<double>> lambdas;
};

// Enumerates every chain path rooted at the current node. The decay graph is
// acyclic and shallow for realistic tables, so plain DFS is fine.
void collect_paths(const NuclideTable& table, NuclideId nuc,
                   std::vector<double>& lambdas, double branch_product,
                   PathSink& sink) {
  sink.ends.push_back(nuc);
  sink.branches.push_back(branch_product);
  sink.lambdas.push_back(lambdas);
  const NuclideData* data = table.find(nuc);
  if (data == nullptr || data->stable()) return;
  for (const auto& b : data->branches) {
    lambdas.push_back(table.decay_const(b.daughter));
    collect_paths(table, b.daughter, lambdas, branch_product * b.fraction, sink);
    lambdas.pop_back();
  }
}

}  // namespace

DecayEngine::DecayEngine(const NuclideTable& table) : table_(&table) {
  for (const auto& [nuc, data] : table.all()) {
    if (data.stable()) continue;
    std::vector<double> lambdas{table.decay_const(nuc)};
    PathSink sink;
    collect_paths(table, nuc, lambdas, 1.0, sink);
    auto& paths = paths_[nuc];
    for (std::size_t i = 0; i < sink.ends.size(); ++i) {
      paths.push_back({sink.ends[i], sink.branches[i], sink.lambdas[i]});
    }
  }
}

double DecayEngine::max_lambda_dt(const FractionMap& fractions,
                                  double dt_months) const {
  double worst = 0.0;
  for (const auto& [nuc, frac] : fractions) {
    if (frac <= 0) continue;
    worst = std::max(worst, table_->decay_const(nuc) * dt_months);
  }
  return worst;
}

FractionMap DecayEngine::decay(const FractionMap& fractions,
                               double dt_months) const {
  FractionMap out;
  for (const auto& [nuc, frac] : fractions) {
    auto it = paths_.find(nuc);
    if (it == paths_.end()) {
      out[nuc] += frac;  // stable or unknown: an endpoint either way
      continue;
    }
    for (const Path& path : it->second) {
      const auto& lam = path.lambdas;
      const std::size_t k = lam.size() - 1;
      double amount;
      if (k == 0) {
        amount = std::exp(-lam[0] * dt_months);
      } else {
        // Bateman: product of transfer rates along the path times a sum of
        // exponentials over pairwise-difference denominators.
        double rate_product = path.branch_product;
        for (std::size_t i = 0; i < k; ++i) rate_product *= lam[i];
        amount = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
          double denom = 1.0;
          for (std::size_t j = 0; j <= k; ++j) {
            if (j != i) denom *= lam[j] - lam[i];
          }
          amount += std::exp(-lam[i] * dt_months) / denom;
        }
        amount *= rate_product;
      }
      if (amount > 0.0) out[path.end] += frac * amount;
    }
  }
  // Drop the tiny negative residue cancellation can leave behind.
  for (auto it = out.begin(); it != out.end();) {
    if (it->second <= 0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace fck
