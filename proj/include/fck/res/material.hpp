#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fck/core.hpp"
#include "fck/res/composition.hpp"
#include "fck/res/decay.hpp"
#include "fck/res/nuclide.hpp"

namespace fck {

// A discrete quantity of nuclear material. Move-only: a material is a unique
// object that changes hands, never a value to copy.
class Material {
 public:
  Material() = default;
  Material(Material&&) = default;
  Material& operator=(Material&&) = default;
  Material(const Material&) = delete;
  Material& operator=(const Material&) = delete;

  ResourceId id() const { return id_; }
  double quantity() const { return qty_; }  // kg
  CompId comp() const { return comp_; }
  int last_decay() const { return last_decay_; }
  AgentId creator() const { return creator_; }
  bool valid() const { return id_.valid(); }

 private:
  friend class ResourceService;
  ResourceId id_;
  double qty_ = 0.0;
  CompId comp_;
  int last_decay_ = 0;
  AgentId creator_;
};

// A discrete non-material resource measured in user units.
class Product {
 public:
  Product() = default;
  Product(Product&&) = default;
  Product& operator=(Product&&) = default;
  Product(const Product&) = delete;
  Product& operator=(const Product&) = delete;

  ResourceId id() const { return id_; }
  double quantity() const { return qty_; }
  const std::string& quality() const { return quality_; }
  bool valid() const { return id_.valid(); }

 private:
  friend class ResourceService;
  ResourceId id_;
  double qty_ = 0.0;
  std::string quality_;
};

// Row emitted once per resource creation; parents are empty for material
// introduced from outside the simulated system.
struct ResourceRecord {
  ResourceId id;
  std::string kind;  // "material" | "product"
  double quantity = 0.0;
  CompId comp;                       // invalid for products
  std::string quality;               // products only
  AgentId creator;
  int month = 0;
  std::vector<ResourceId> parents;
};

// Creates and transforms resources, assigns ids, and keeps the running mass
// ledger the conservation audit checks against. Every operation on material
// is tracked through the on_resource hook.
class ResourceService {
 public:
  ResourceService(const NuclideTable& table, CompositionRegistry& comps,
                  DecayMode mode = DecayMode::Manual);

  const NuclideTable& table() const { return *table_; }
  CompositionRegistry& compositions() { return *comps_; }
  const CompositionRegistry& compositions() const { return *comps_; }
  const DecayEngine& decay_engine() const { return decay_; }
  DecayMode decay_mode() const { return mode_; }

  Material create_material(AgentId creator, double qty_kg,
                           const FractionMap& recipe, int month);
  Material create_material(AgentId creator, double qty_kg, CompId comp,
                           int month);
  Product create_product(AgentId creator, double qty, std::string quality,
                         int month);

  // Splits qty kilograms off m. Both children share m's composition and
  // their quantities sum to m's; m itself is retired.
  std::pair<Material, Material> split(Material&& m, double qty, AgentId by,
                                      int month);

  // Combines two materials; fractions are mass-weighted then renormalized.
  Material absorb(Material&& a, Material&& b, AgentId by, int month);

  // Advances composition to the given month. No-op below the significance
  // threshold, in which case last_decay is also left unchanged.
  void decay(Material& m, int to_month);

  // Swaps the composition in place (reactor burnup by recipe). Quantity and
  // identity are preserved.
  void transmute(Material& m, CompId comp);
  void transmute(Material& m, const FractionMap& recipe);

  // Applies lazy-mode decay before a composition is observed.
  void observe(Material& m, int month);

  // Mass introduced from outside the system (creations without parents).
  double created_mass() const { return created_mass_; }
  // Mass held by resources not yet retired by split/absorb.
  double live_mass() const { return live_mass_; }

  std::function<void(const ResourceRecord&)> on_resource;

 private:
  ResourceId next_id();
  Material make(AgentId creator, double qty, CompId comp, int month,
                std::vector<ResourceId> parents);

  const NuclideTable* table_;
  CompositionRegistry* comps_;
  DecayEngine decay_;
  DecayMode mode_;
  std::int64_t next_ = 0;
  double created_mass_ = 0.0;
  double live_mass_ = 0.0;
};

}  // namespace fck
