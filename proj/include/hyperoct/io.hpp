#pragma once

// JSON encodings of systems, parametrizations and representations.
//
// System file:
//   {"p": 65521 or "rational", "n": 3, "s": 1, "d": 8 (optional degree bound),
//    "f": [[["1", [4, 0, 0]], ...], ...], "phi": [["-3", [2, 0, 0]], ...]}
// Coefficients are decimal strings ("a/b" allowed); exponents are listed per
// variable.

#include <fstream>
#include <string>

#include <json.hpp>

#include "hyperoct/hyperoct.hpp"
#include "hyperoct/partitions.hpp"

namespace hyperoct {

using Json = nlohmann::ordered_json;

// Non-negative integer, whether stored signed or unsigned.
inline bool is_count(const Json& j) { return j.is_number_integer() && j.get<int64_t>() >= 0; }

// Canonical text of a coefficient: symmetric residue for GF(p).
inline std::string coeff_string(const Fp& c) {
  uint64_t v = c.value(), p = c.modulus();
  return v > p / 2 ? "-" + std::to_string(p - v) : std::to_string(v);
}
inline std::string coeff_string(const Rational& c) { return c.to_string(); }

template <class K>
Json field_tag(const K& f) {
  if (f.characteristic() == 0) return "rational";
  return f.characteristic();
}

template <class K>
Json poly_to_json(const MultiPoly<K>& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json ex = Json::array();
    for (size_t i = 0; i < p.nvars(); ++i) ex.push_back(m[i]);
    out.push_back(Json::array({coeff_string(c), ex}));
  }
  return out;
}

template <class K>
MultiPoly<K> poly_from_json(const Json& j, const K& f, size_t n) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  std::vector<typename MultiPoly<K>::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
      throw ParseError("term must be [coefficient-string, [exponents]]");
    if (t[1].size() != n) throw ParseError("term has " + std::to_string(t[1].size()) + " exponents, expected " +
                                           std::to_string(n));
    std::vector<uint32_t> ex;
    for (const auto& e : t[1]) {
      if (!is_count(e)) throw ParseError("exponents must be non-negative integers");
      ex.push_back(e.get<uint32_t>());
    }
    terms.emplace_back(Monomial::from_exponents(ex), f.from_string(t[0].get<std::string>()));
  }
  return MultiPoly<K>(f, n, std::move(terms));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// The "p" entry of a system file: 0 for rational.
inline uint64_t system_characteristic(const Json& j) {
  if (!j.contains("p")) throw ParseError("missing field 'p'");
  const Json& p = j["p"];
  if (p.is_string() && (p == "rational" || p == "Q")) return 0;
  if (is_count(p)) return p.get<uint64_t>();
  throw ParseError("'p' must be a prime or \"rational\"");
}

template <class K>
InvariantSystem<K> system_from_json(const Json& j, const K& f) {
  for (const char* key : {"n", "s", "f", "phi"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  if (!is_count(j["n"]) || !is_count(j["s"])) throw ParseError("n and s must be counts");
  uint32_t n = j["n"].get<uint32_t>(), s = j["s"].get<uint32_t>();
  if (n == 0 || n >= kMaxVars) throw ParseError("n out of range");
  if (!j["f"].is_array()) throw ParseError("'f' must be a list of polynomials");
  std::vector<MultiPoly<K>> fs;
  for (const auto& p : j["f"]) fs.push_back(poly_from_json(p, f, n));
  InvariantSystem<K> sys(f, n, s, std::move(fs), poly_from_json(j["phi"], f, n));
  sys.validate();
  return sys;
}

template <class K>
Json system_to_json(const InvariantSystem<K>& sys) {
  Json j;
  j["p"] = field_tag(sys.field);
  j["n"] = sys.n;
  j["s"] = sys.s;
  j["f"] = Json::array();
  for (const auto& p : sys.f) j["f"].push_back(poly_to_json(p));
  j["phi"] = poly_to_json(sys.phi);
  return j;
}

template <class K>
Json unipoly_to_json(const UniPoly<K>& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(coeff_string(c));
  return out;
}

template <class K>
Json param_to_json(const ZeroDimParam<K>& r) {
  Json j;
  j["v"] = unipoly_to_json(r.v);
  j["coords"] = Json::array();
  for (const auto& c : r.coords) j["coords"].push_back(unipoly_to_json(c));
  j["beta"] = Json::array();
  for (const auto& b : r.beta) j["beta"].push_back(coeff_string(b));
  j["seed"] = r.seed;
  return j;
}

inline Json partition_to_json(const Partition& l) {
  Json out = Json::array();
  for (auto [m, k] : l.groups()) out.push_back(Json::array({m, k}));
  return out;
}

inline Json type_to_json(const OrbitType& t) { return Json{{"lambda", partition_to_json(t.lambda)}, {"zero_pad", t.zero_pad}}; }

template <class K>
Json rep_to_json(const HyperRep<K>& rep, uint64_t nC) {
  Json j;
  j["entries"] = Json::array();
  for (const auto& e : rep.entries)
    j["entries"].push_back(Json{{"type", type_to_json(e.type)},
                                {"param", param_to_json(e.param)},
                                {"orbit_size", orbit_size_x(e.type.lambda, rep.n)},
                                {"level", e.level}});
  j["stats"] = Json{{"compressed_total", rep.compressed_total()},
                    {"expanded_total", expansion_count(rep)},
                    {"bound_nC", nC},
                    {"seed", rep.seed}};
  return j;
}

}  // namespace hyperoct
