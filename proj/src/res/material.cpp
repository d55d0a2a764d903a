#include "fck/res/material.hpp"

#include <cmath>

namespace fck {

ResourceService::ResourceService(const NuclideTable& table,
                                 CompositionRegistry& comps, DecayMode mode)
    : table_(&table), comps_(&comps), decay_(table), mode_(mode) {}

ResourceId ResourceService::next_id() { return ResourceId{next_++}; }

Material ResourceService::make(AgentId creator, double qty, CompId comp,
                               int month, int last_decay,
                               std::vector<ResourceId> parents) {
  Material m;
  m.id_ = next_id();
  m.qty_ = qty;
  m.comp_ = comp;
  m.last_decay_ = last_decay;
  m.creator_ = creator;
  live_mass_ += qty;
  if (parents.empty()) created_mass_ += qty;
  if (on_resource) {
    on_resource({m.id_, "material", qty, comp, "", creator, month,
                 std::move(parents)});
  }
  return m;
}

Material ResourceService::create_material(AgentId creator, double qty_kg,
                                          const FractionMap& recipe,
                                          int month) {
  if (qty_kg < 0) throw ValidationError("material quantity must be >= 0");
  return make(creator, qty_kg, comps_->intern(normalized(recipe)), month, month, {});
}

Material ResourceService::create_material(AgentId creator, double qty_kg,
                                          CompId comp, int month) {
  if (qty_kg < 0) throw ValidationError("material quantity must be >= 0");
  comps_->fractions(comp);  // bounds check
  return make(creator, qty_kg, comp, month, month, {});
}

Product ResourceService::create_product(AgentId creator, double qty,
                                        std::string quality, int month) {
  if (qty < 0) throw ValidationError("product quantity must be >= 0");
  Product p;
  p.id_ = next_id();
  p.qty_ = qty;
  p.quality_ = std::move(quality);
  if (on_resource) {
    on_resource({p.id_, "product", qty, CompId{}, p.quality_, creator, month, {}});
  }
  return p;
}

std::pair<Material, Material> ResourceService::split(Material&& m, double qty,
                                                     AgentId by, int month) {
  if (!m.valid()) throw SimError("split of a dead material");
  if (qty < 0 || qty > m.qty_) {
    throw ValidationError("split quantity out of [0, " +
                          std::to_string(m.qty_) + "]");
  }
  live_mass_ -= m.qty_;
  Material a = make(by, qty, m.comp_, month, m.last_decay_, {m.id_});
  Material b = make(by, m.qty_ - qty, m.comp_, month, m.last_decay_, {m.id_});
  m.id_ = ResourceId{};
  return {std::move(a), std::move(b)};
}

Material ResourceService::absorb(Material&& a, Material&& b, AgentId by,
                                 int month) {
  if (!a.valid() || !b.valid()) throw SimError("absorb of a dead material");
  CompId comp;
  if (b.qty_ == 0.0 || a.comp_ == b.comp_) {
    comp = a.comp_;  // keep the composition id bit-exact
  } else if (a.qty_ == 0.0) {
    comp = b.comp_;
  } else {
    FractionMap blend;
    for (const auto& [nuc, frac] : comps_->fractions(a.comp_)) {
      blend[nuc] += a.qty_ * frac;
    }
    for (const auto& [nuc, frac] : comps_->fractions(b.comp_)) {
      blend[nuc] += b.qty_ * frac;
    }
    comp = comps_->intern(normalized(blend));
  }
  int last = std::max(a.last_decay_, b.last_decay_);
  live_mass_ -= a.qty_ + b.qty_;
  Material child = make(by, a.qty_ + b.qty_, comp, month, last, {a.id_, b.id_});
  a.id_ = ResourceId{};
  b.id_ = ResourceId{};
  return child;
}

void ResourceService::decay(Material& m, int to_month) {
  if (!m.valid()) throw SimError("decay of a dead material");
  if (mode_ == DecayMode::Never) return;
  if (to_month < m.last_decay_) {
    throw ValidationError("decay target month precedes the material's last decay");
  }
  int dt = to_month - m.last_decay_;
  if (dt == 0) return;
  const FractionMap& now = comps_->fractions(m.comp_);
  if (decay_.max_lambda_dt(now, dt) < DecayEngine::kSignificance) {
    return;  // below significance: skip, and let the interval accumulate
  }
  m.comp_ = comps_->decay(m.comp_, dt, decay_);
  m.last_decay_ = to_month;
}

void ResourceService::transmute(Material& m, CompId comp) {
  if (!m.valid()) throw SimError("transmute of a dead material");
  comps_->fractions(comp);
  m.comp_ = comp;
}

void ResourceService::transmute(Material& m, const FractionMap& recipe) {
  transmute(m, comps_->intern(normalized(recipe)));
}

void ResourceService::observe(Material& m, int month) {
  if (mode_ == DecayMode::Lazy && month > m.last_decay()) {
    decay(m, month);
  }
}

}  // namespace fck
