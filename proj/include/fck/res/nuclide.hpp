#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fck/core.hpp"

namespace fck {

// Nuclides are identified by zzaaam integers: Z*10000 + A*10 + metastable.
struct NuclideId {
  std::int32_t raw = 0;

  int z() const { return raw / 10000; }
  int a() const { return (raw / 10) % 1000; }
  int m() const { return raw % 10; }
  bool valid() const {
    return z() >= 1 && z() <= 120 && a() >= z();
  }
  auto operator<=>(const NuclideId&) const = default;
};

// "U235", "Pu241", "Am242m" style names.
std::string nuclide_name(NuclideId nuc);
// Accepts alias names (case-insensitive element symbol) or bare zzaaam
// integers. Returns nullopt on anything else.
std::optional<NuclideId> parse_nuclide(const std::string& text);

struct DecayBranch {
  NuclideId daughter;
  double fraction = 0.0;
};

struct NuclideData {
  NuclideId nuc;
  double decay_const = 0.0;  // 1/month; 0 for stable
  double atomic_mass = 0.0;  // g/mol
  std::vector<DecayBranch> branches;

  bool stable() const { return decay_const == 0.0; }
};

// Decay and mass data for the nuclides a simulation cares about. Nuclides
// absent from the table are treated as stable with atomic mass equal to
// their mass number.
class NuclideTable {
 public:
  // Parses the tabular text format documented in docs/nuclide_data.md.
  static NuclideTable parse(const std::string& text);
  // The compiled-in default table, or the file named by FCK_NUCLIDE_DATA
  // when that variable is set.
  static NuclideTable bundled();
  static NuclideTable load_file(const std::string& path);

  bool contains(NuclideId nuc) const { return data_.count(nuc) > 0; }
  const NuclideData* find(NuclideId nuc) const;
  double decay_const(NuclideId nuc) const;
  double atomic_mass(NuclideId nuc) const;

  const std::map<NuclideId, NuclideData>& all() const { return data_; }

 private:
  std::map<NuclideId, NuclideData> data_;
};

}  // namespace fck
