#pragma once

#include <map>
#include <string>

#include "stsrank/bigint.hpp"
#include "stsrank/errors.hpp"

namespace stsrank::counting {

enum class Provenance { Paper, Computed, UserSupplied };

/// Table of known base constants: Psi_u (labeled STS(u)), Lambda_u (latin
/// squares of order u), Pi_u (symmetric latin squares of order u).  The
/// formulas are tight but conditional on these values; the default set holds
/// exactly the constants the paper cites, and files may extend it.
class CountRegistry {
 public:
  struct Entry {
    Int value;
    Provenance provenance;
  };

  static CountRegistry defaults();
  /// Default registry extended by a JSON file {"psi": {"7": "30", ...},
  /// "lambda": {...}, "pi": {...}} with decimal-string values.
  static CountRegistry load_file(const std::string& path);

  /// Psi of an order that cannot carry an STS (u > 1 and not 1,3 mod 6) is 0.
  Int psi(unsigned u) const;
  Int lambda(unsigned u) const;
  Int pi(unsigned u) const;

  bool has_psi(unsigned u) const { return psi_.count(u) || implied_zero(u); }
  bool has_lambda(unsigned u) const { return lambda_.count(u) > 0; }
  bool has_pi(unsigned u) const { return pi_.count(u) > 0; }

  // Append-only; a different value for an existing key is a conflict.
  void set_psi(unsigned u, const Int& value, Provenance prov);
  void set_lambda(unsigned u, const Int& value, Provenance prov);
  void set_pi(unsigned u, const Int& value, Provenance prov);

  const std::map<unsigned, Entry>& psi_entries() const { return psi_; }
  const std::map<unsigned, Entry>& lambda_entries() const { return lambda_; }
  const std::map<unsigned, Entry>& pi_entries() const { return pi_; }

 private:
  static bool implied_zero(unsigned u) { return u > 1 && u % 6 != 1 && u % 6 != 3; }
  std::map<unsigned, Entry> psi_, lambda_, pi_;
};

}  // namespace stsrank::counting
