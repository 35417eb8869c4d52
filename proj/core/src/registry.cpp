#include "stsrank/registry.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace stsrank::counting {

namespace {

void merge_entry(std::map<unsigned, CountRegistry::Entry>& table, unsigned u,
                 const Int& value, Provenance prov, const char* symbol) {
  if (auto it = table.find(u); it != table.end()) {
    if (it->second.value != value)
      throw ValidationError(std::string("conflicting value for ") + symbol + "_" +
                            std::to_string(u) + ": registry has " +
                            it->second.value.str() + ", got " + value.str());
    return;
  }
  table.emplace(u, CountRegistry::Entry{value, prov});
}

}  // namespace

CountRegistry CountRegistry::defaults() {
  CountRegistry r;
  const auto P = Provenance::Paper;
  r.set_lambda(1, 1, P);
  r.set_lambda(2, 2, P);
  r.set_lambda(3, 12, P);
  r.set_lambda(4, 576, P);
  r.set_lambda(7, Int("61479419904000"), P);
  r.set_lambda(8, Int("108776032459082956800"), P);
  r.set_lambda(9, Int("5524751496156892842531225600"), P);
  r.set_lambda(10, Int("9982437658213039871725064756920320000"), P);
  r.set_psi(0, 1, P);
  r.set_psi(1, 1, P);
  r.set_psi(3, 1, P);
  r.set_psi(7, 30, P);
  r.set_psi(9, 840, P);
  r.set_pi(0, 1, P);
  r.set_pi(1, 1, P);
  r.set_pi(3, 6, P);
  r.set_pi(7, 31449600, P);
  r.set_pi(9, Int("444733651353600"), P);
  return r;
}

CountRegistry CountRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open registry file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed registry file " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw ValidationError("malformed registry file " + path + ": expected an object");

  CountRegistry r = defaults();
  const std::pair<const char*, void (CountRegistry::*)(unsigned, const Int&, Provenance)>
      sections[] = {{"psi", &CountRegistry::set_psi},
                    {"lambda", &CountRegistry::set_lambda},
                    {"pi", &CountRegistry::set_pi}};
  for (const auto& [key, setter] : sections) {
    if (!doc.contains(key)) continue;
    const auto& sec = doc.at(key);
    if (!sec.is_object())
      throw ValidationError("malformed registry file: \"" + std::string(key) +
                            "\" must map orders to decimal strings");
    for (const auto& [order_str, val] : sec.items()) {
      unsigned u = 0;
      try {
        u = static_cast<unsigned>(std::stoul(order_str));
      } catch (const std::exception&) {
        throw ValidationError("malformed registry key \"" + order_str + "\"");
      }
      if (!val.is_string())
        throw ValidationError("registry value for " + std::string(key) + "_" +
                              order_str + " must be a decimal string");
      Int value;
      try {
        value = Int(val.get<std::string>());
      } catch (const std::exception&) {
        throw ValidationError("registry value for " + std::string(key) + "_" +
                              order_str + " is not a decimal integer");
      }
      (r.*setter)(u, value, Provenance::UserSupplied);
    }
  }
  return r;
}

Int CountRegistry::psi(unsigned u) const {
  if (auto it = psi_.find(u); it != psi_.end()) return it->second.value;
  if (implied_zero(u)) return 0;
  throw UnknownConstantError("Psi", u);
}

Int CountRegistry::lambda(unsigned u) const {
  if (auto it = lambda_.find(u); it != lambda_.end()) return it->second.value;
  throw UnknownConstantError("Lambda", u);
}

Int CountRegistry::pi(unsigned u) const {
  if (auto it = pi_.find(u); it != pi_.end()) return it->second.value;
  throw UnknownConstantError("Pi", u);
}

void CountRegistry::set_psi(unsigned u, const Int& value, Provenance prov) {
  if (implied_zero(u) && value != 0)
    throw ValidationError("conflicting value for Psi_" + std::to_string(u) +
                          ": no STS of that order exists");
  merge_entry(psi_, u, value, prov, "Psi");
}

void CountRegistry::set_lambda(unsigned u, const Int& value, Provenance prov) {
  merge_entry(lambda_, u, value, prov, "Lambda");
}

void CountRegistry::set_pi(unsigned u, const Int& value, Provenance prov) {
  merge_entry(pi_, u, value, prov, "Pi");
}

}  // namespace stsrank::counting
