#pragma once

#include <optional>
#include <string>

// vendored single-header nlohmann/json
#include <json.hpp>

#include "bkl/bilinear.hpp"
#include "bkl/canonical.hpp"
#include "bkl/rmatrix.hpp"

namespace bkl {

// "M[2,2] + q*M[1,1]": leading monomial first (lexicographically decreasing
// index), coefficients rendered in the Laurent grammar, parenthesized when
// they have more than one term.
std::string render_fock_text(const FockVector& u);
// Sorted list of {f, c} records, ascending lexicographic f.
nlohmann::json fock_to_json(const FockVector& u);
FockVector fock_from_json(const nlohmann::json& j);

// CSV with columns g,f,polynomial; weight literals are quoted.
std::string table_to_csv(const BKLTable& t);
nlohmann::json table_to_json(const BKLTable& t);

std::string report_text(const PairingReport& report);

nlohmann::json theta_to_json(const ThetaFactorization& th);

// Disk cache: one JSON file per key under dir; writes go through a
// temporary and a rename, corrupt or mismatched entries are recomputed.
std::optional<nlohmann::json> cache_lookup(const std::string& dir,
                                           const std::string& key,
                                           const nlohmann::json& config);
void cache_store(const std::string& dir, const std::string& key,
                 const nlohmann::json& config, const nlohmann::json& result);

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace bkl
