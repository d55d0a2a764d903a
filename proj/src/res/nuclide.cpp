#include "fck/res/nuclide.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fck/default_nuclides.hpp"

namespace fck {

namespace {

constexpr const char* kSymbols[] = {
    "n",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
    "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
    "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

constexpr int kSymbolCount = static_cast<int>(sizeof(kSymbols) / sizeof(kSymbols[0]));

int element_z(const std::string& symbol) {
  for (int z = 1; z < kSymbolCount; ++z) {
    const char* s = kSymbols[z];
    if (symbol.size() == std::string::size_type(std::char_traits<char>::length(s)) &&
        std::equal(symbol.begin(), symbol.end(), s, [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return z;
    }
  }
  return -1;
}

}  // namespace

std::string nuclide_name(NuclideId nuc) {
  std::string name;
  if (nuc.z() >= 1 && nuc.z() < kSymbolCount) {
    name = kSymbols[nuc.z()];
  } else {
    name = "E" + std::to_string(nuc.z());
  }
  name += std::to_string(nuc.a());
  if (nuc.m() > 0) name += "m";
  return name;
}

std::optional<NuclideId> parse_nuclide(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (std::isdigit(static_cast<unsigned char>(text[0]))) {
    char* end = nullptr;
    long raw = std::strtol(text.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') return std::nullopt;
    NuclideId nuc{static_cast<std::int32_t>(raw)};
    if (!nuc.valid()) return std::nullopt;
    return nuc;
  }
  std::string::size_type i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  std::string symbol = text.substr(0, i);
  std::string rest = text.substr(i);
  if (!rest.empty() && rest[0] == '-') rest = rest.substr(1);
  if (symbol.empty() || rest.empty()) return std::nullopt;
  int meta = 0;
  if (rest.back() == 'm' || rest.back() == 'M') {
    meta = 1;
    rest.pop_back();
  }
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  int z = element_z(symbol);
  if (z < 0 || rest.empty()) return std::nullopt;
  int a = std::atoi(rest.c_str());
  NuclideId nuc{static_cast<std::int32_t>(z * 10000 + a * 10 + meta)};
  if (!nuc.valid()) return std::nullopt;
  return nuc;
}

NuclideTable NuclideTable::parse(const std::string& text) {
  NuclideTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string nuc_s, half_s, daughter_s, branch_s, mass_s, alias_s;
    if (!(row >> nuc_s)) continue;  // blank
    if (!(row >> half_s >> daughter_s >> branch_s >> mass_s)) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": expected 5 or 6 columns");
    }
    row >> alias_s;  // optional
    auto nuc = parse_nuclide(nuc_s);
    if (!nuc) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": bad nuclide id '" + nuc_s + "'");
    }
    double mass = std::atof(mass_s.c_str());
    if (!(mass > 0)) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": bad atomic mass");
    }
    auto& entry = table.data_[*nuc];
    if (entry.branches.empty() && entry.decay_const == 0 && entry.atomic_mass == 0) {
      entry.nuc = *nuc;
      entry.atomic_mass = mass;
    } else if (std::abs(entry.atomic_mass - mass) > 1e-9) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": atomic mass differs from earlier row for " + nuc_s);
    }
    if (half_s == "stable") {
      if (entry.decay_const != 0 || !entry.branches.empty()) {
        throw ValidationError("nuclide data line " + std::to_string(lineno) +
                              ": stable row conflicts with decay rows");
      }
      continue;
    }
    double half_life = std::atof(half_s.c_str());
    if (!(half_life > 0)) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": bad half life '" + half_s + "'");
    }
    double lambda = std::log(2.0) / half_life;
    if (entry.decay_const != 0 && std::abs(entry.decay_const - lambda) > 1e-12 * lambda) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": half life differs from earlier row for " + nuc_s);
    }
    entry.decay_const = lambda;
    auto daughter = parse_nuclide(daughter_s);
    if (!daughter) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": bad daughter id '" + daughter_s + "'");
    }
    double branch = std::atof(branch_s.c_str());
    if (!(branch > 0) || branch > 1) {
      throw ValidationError("nuclide data line " + std::to_string(lineno) +
                            ": branch fraction out of (0,1]");
    }
    entry.branches.push_back({*daughter, branch});
  }
  for (auto& [nuc, data] : table.data_) {
    if (data.stable()) continue;
    double sum = 0;
    for (const auto& b : data.branches) sum += b.fraction;
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("branch fractions for " + nuclide_name(nuc) +
                            " sum to " + std::to_string(sum));
    }
  }
  // The chain solver needs pairwise distinct decay constants; nudge exact
  // collisions apart (no-op for the bundled table).
  std::map<double, int> seen;
  for (auto& [nuc, data] : table.data_) {
    if (data.stable()) continue;
    int n = seen[data.decay_const]++;
    if (n > 0) data.decay_const *= 1.0 + 1e-9 * n;
  }
  return table;
}

NuclideTable NuclideTable::bundled() {
  if (const char* path = std::getenv("FCK_NUCLIDE_DATA")) {
    return load_file(path);
  }
  return parse(detail::kDefaultNuclideData);
}

NuclideTable NuclideTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open nuclide data file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const NuclideData* NuclideTable::find(NuclideId nuc) const {
  auto it = data_.find(nuc);
  return it == data_.end() ? nullptr : &it->second;
}

double NuclideTable::decay_const(NuclideId nuc) const {
  const NuclideData* d = find(nuc);
  return d ? d->decay_const : 0.0;
}

double NuclideTable::atomic_mass(NuclideId nuc) const {
  const NuclideData* d = find(nuc);
  return d ? d->atomic_mass : static_cast<double>(nuc.a());
}

}  // namespace fck
