#include "bkl/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bkl {

namespace {

// One rendered term "q^2*M[1,1]" plus the sign to splice into the sum.
std::pair<char, std::string> render_term(const Weight& f, const Laurent& c) {
  std::string mono = "M[" + weight_str(f) + "]";
  if (c.is_one()) return {'+', mono};
  if (c == Laurent::from_int(-1)) return {'-', mono};
  if (c.terms().size() == 1) {
    Laurent mag = c;
    char sign = '+';
    if (c.terms().begin()->second < 0) {
      sign = '-';
      mag = -c;
    }
    return {sign, mag.str() + "*" + mono};
  }
  return {'+', "(" + c.str() + ")*" + mono};
}

}  // namespace

std::string render_fock_text(const FockVector& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    auto [sign, text] = render_term(it->first, it->second);
    if (first) {
      if (sign == '-') out << "-";
      first = false;
    } else {
      out << " " << sign << " ";
    }
    out << text;
  }
  return out.str();
}

nlohmann::json fock_to_json(const FockVector& u) {
  nlohmann::json j;
  j["b"] = u.sequence().str();
  j["k"] = u.level();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [f, c] : u.terms()) {
    nlohmann::json rec;
    rec["f"] = f;
    rec["c"] = c.str();
    terms.push_back(std::move(rec));
  }
  j["terms"] = std::move(terms);
  return j;
}

FockVector fock_from_json(const nlohmann::json& j) {
  FockVector u(ZeroOneSequence::parse(j.at("b").get<std::string>()),
               j.at("k").get<int>());
  for (const auto& rec : j.at("terms")) {
    Weight f = rec.at("f").get<std::vector<int>>();
    u.add_term(f, Laurent::parse(rec.at("c").get<std::string>()));
  }
  return u;
}

std::string table_to_csv(const BKLTable& t) {
  std::ostringstream out;
  out << "g,f,polynomial\n";
  for (const auto& [key, c] : t.entries)
    out << "\"" << weight_str(key.first) << "\",\"" << weight_str(key.second) << "\","
        << c.str() << "\n";
  return out.str();
}

nlohmann::json table_to_json(const BKLTable& t) {
  nlohmann::json j;
  j["b"] = t.b.str();
  j["k"] = t.k;
  j["kind"] = t.kind == BasisKind::Canonical ? "canonical" : "dual";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, c] : t.entries) {
    nlohmann::json rec;
    rec["g"] = key.first;
    rec["f"] = key.second;
    rec["p"] = c.str();
    rows.push_back(std::move(rec));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string report_text(const PairingReport& report) {
  std::ostringstream out;
  out << "b=" << report.b.str() << " k=" << report.k << "\n";
  for (const auto& e : report.entries)
    out << (e.pass ? "  ok   " : "  FAIL ") << e.label << "  f=(" << weight_str(e.f)
        << ") g=(" << weight_str(e.g) << ")  value=" << e.value.str()
        << "  expected=" << e.expected.str() << "\n";
  return out.str();
}

nlohmann::json theta_to_json(const ThetaFactorization& th) {
  nlohmann::json j;
  j["k"] = th.k;
  j["word"] = th.word;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : theta_dump(th)) {
    nlohmann::json r;
    r["t"] = rec.t;
    r["a"] = rec.a;
    r["E"] = rec.e;
    r["F"] = rec.f;
    recs.push_back(std::move(r));
  }
  j["factors"] = std::move(recs);
  return j;
}

std::optional<nlohmann::json> cache_lookup(const std::string& dir,
                                           const std::string& key,
                                           const nlohmann::json& config) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return std::nullopt;
  if (!j.contains("version") || j["version"] != kLibraryVersion) return std::nullopt;
  if (!j.contains("config") || j["config"] != config) return std::nullopt;
  if (!j.contains("result")) return std::nullopt;
  return j["result"];
}

void cache_store(const std::string& dir, const std::string& key,
                 const nlohmann::json& config, const nlohmann::json& result) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json j;
  j["version"] = kLibraryVersion;
  j["config"] = config;
  j["result"] = result;
  fs::path final_path = fs::path(dir) / (key + ".json");
  fs::path tmp_path = fs::path(dir) / (key + ".tmp");
  {
    std::ofstream out(tmp_path);
    out << j.dump(1);
  }
  fs::rename(tmp_path, final_path);
}

}  // namespace bkl
