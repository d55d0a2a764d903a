#pragma once

#include <map>
#include <vector>

#include "fck/res/composition.hpp"
#include "fck/res/nuclide.hpp"

namespace fck {

// Analytic first-order decay on mass fractions. Chains are solved with the
// Bateman solution per linearized chain path; branch fractions are treated
// as mass preserving, so total mass is conserved across every step.
class DecayEngine {
 public:
  explicit DecayEngine(const NuclideTable& table);

  // Advances a fraction map by dt months. The result keeps unit sum up to
  // floating point roundoff.
  FractionMap decay(const FractionMap& fractions, double dt_months) const;

  // max over present nuclides of lambda * dt; drives the significance
  // threshold for no-op decays.
  double max_lambda_dt(const FractionMap& fractions, double dt_months) const;

  const NuclideTable& table() const { return *table_; }

  // Below this on max_lambda_dt a decay call is a no-op and the material's
  // last-decay month is left untouched, so skipped intervals accumulate.
  static constexpr double kSignificance = 1e-6;

 private:
  struct Path {
    NuclideId end;
    double branch_product = 1.0;
    std::vector<double> lambdas;  // along the path, end included
  };
  const NuclideTable* table_;
  std::map<NuclideId, std::vector<Path>> paths_;
};

}  // namespace fck
