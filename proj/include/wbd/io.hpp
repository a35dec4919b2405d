#pragma once

// JSON file formats for algebras and decompositions. Needs nlohmann/json and
// OpenSSL (libcrypto) for the SHA-256 input hash.

#include <openssl/evp.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wbd/wedderburn.hpp"

namespace wbd {

using json = nlohmann::json;

/// "Q" or a prime p >= 7.
struct FieldSpec {
  std::uint64_t prime = 0;  ///< 0 means the rationals

  bool rational() const { return prime == 0; }
  json to_json() const { return rational() ? json("Q") : json{{"Fp", prime}}; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return {};
    fail(ErrorKind::invalid_field, "unknown field '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    const std::uint64_t p = j["Fp"].get<std::uint64_t>();
    if (p < 7) fail(ErrorKind::invalid_field, "characteristic " + std::to_string(p) + " is not allowed (need 0 or a prime >= 7)");
    if (!is_prime_u64(p)) fail(ErrorKind::invalid_field, "modulus " + std::to_string(p) + " is not prime");
    return {p};
  }
  fail(ErrorKind::invalid_field, "field must be \"Q\" or {\"Fp\": prime}");
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::verification_failure, "SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse_error, std::string("JSON syntax error: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_input, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace detail {

inline void pretty_into(const json& j, std::string& out, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
  };
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      pretty_into(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      pretty_into(j[i], out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else if (j.is_array()) {
    // one space after each separating comma keeps rows readable
    bool in_string = false, escaped = false;
    for (char ch : j.dump()) {
      out += ch;
      if (escaped) {
        escaped = false;
      } else if (ch == '\\') {
        escaped = in_string;
      } else if (ch == '"') {
        in_string = !in_string;
      } else if (ch == ',' && !in_string) {
        out += ' ';
      }
    }
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Indented JSON with every array of scalars kept on one line; deterministic.
inline std::string pretty_json(const json& j) {
  std::string out;
  detail::pretty_into(j, out, 0);
  return out + "\n";
}

// ---------------------------------------------------------------------------
// Algebra files

struct AlgebraMetadata {
  std::string name;
  std::string description;
};

template <ExactField K>
K parse_coefficient(const json& j) {
  if (j.is_string()) return K::parse(j.get<std::string>());
  if (j.is_number_integer()) return K(j.get<long>());
  fail(ErrorKind::parse_error, "coefficient must be a string or an integer, got " + j.dump());
}

template <ExactField K>
json vector_to_json(const Vec<K>& v) {
  json row = json::array();
  for (const auto& c : v) row.push_back(c.str());
  return row;
}

template <ExactField K>
Vec<K> vector_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorKind::parse_error, "row must be an array of " + std::to_string(n) + " coefficients");
  Vec<K> v;
  for (const auto& c : j) v.push_back(parse_coefficient<K>(c));
  return v;
}

template <ExactField K>
json subspace_to_json(const Subspace<K>& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) rows.push_back(vector_to_json(v));
  return rows;
}

template <ExactField K>
Subspace<K> subspace_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) fail(ErrorKind::parse_error, "basis must be an array of rows");
  std::vector<Vec<K>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json<K>(r, n));
  return Subspace<K>::span(n, rows);
}

/// Tensor and weight exactly as written; the weight is not validated.
template <ExactField K>
struct RawAlgebra {
  Algebra<K> algebra;
  Vec<K> weight;
  AlgebraMetadata meta;
};

/// For F_p the caller must hold a ModP::Scope for the file's prime.
template <ExactField K>
RawAlgebra<K> raw_algebra_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::parse_error, "algebra file must be a JSON object");
  for (const char* key : {"field", "dim", "structure", "weight"})
    if (!j.contains(key)) fail(ErrorKind::parse_error, std::string("missing key '") + key + "'");
  const FieldSpec field = parse_field(j["field"]);
  if (field.prime != K::characteristic())
    fail(ErrorKind::invalid_field, "file field does not match the active scalar type");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    fail(ErrorKind::parse_error, "dim must be a positive integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n) fail(ErrorKind::parse_error, "basis must list dim labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) fail(ErrorKind::parse_error, "basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  if (!j["structure"].is_array()) fail(ErrorKind::parse_error, "structure must be an array of [i, j, k, coefficient]");
  std::vector<Triple<K>> triples;
  for (const auto& t : j["structure"]) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
        !t[2].is_number_unsigned())
      fail(ErrorKind::parse_error, "malformed structure entry " + t.dump());
    const std::size_t a = t[0], b = t[1], c = t[2];
    if (a >= n || b >= n || c >= n) fail(ErrorKind::parse_error, "structure index out of range in " + t.dump());
    triples.push_back({a, b, c, parse_coefficient<K>(t[3])});
  }
  RawAlgebra<K> raw{Algebra<K>::from_triples(n, labels, triples), vector_from_json<K>(j["weight"], n), {}};
  raw.meta.name = j.value("name", "");
  raw.meta.description = j.value("description", "");
  return raw;
}

/// Builds and validates the baric algebra (weight homomorphism included).
template <ExactField K>
BaricAlgebra<K> algebra_from_json(const json& j, AlgebraMetadata* meta = nullptr) {
  RawAlgebra<K> raw = raw_algebra_from_json<K>(j);
  if (meta) *meta = raw.meta;
  return BaricAlgebra<K>(std::move(raw.algebra), std::move(raw.weight));
}

template <ExactField K>
json algebra_to_json(const BaricAlgebra<K>& u, const AlgebraMetadata& meta = {}) {
  const Algebra<K>& a = u.algebra();
  json j;
  j["field"] = FieldSpec{K::characteristic()}.to_json();
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  json s = json::array();
  for (const auto& t : a.triples()) s.push_back(json::array({t.i, t.j, t.k, t.value.str()}));
  j["structure"] = std::move(s);
  j["weight"] = vector_to_json(u.weight());
  if (!meta.name.empty()) j["name"] = meta.name;
  if (!meta.description.empty()) j["description"] = meta.description;
  return j;
}

/// Hash of the canonical serialization (sorted keys, compact).
inline std::string algebra_hash(const json& algebra) { return sha256_hex(algebra.dump()); }

// ---------------------------------------------------------------------------
// Decomposition files

inline json certificate_to_json(const Certificate& c) {
  json arr = json::array();
  for (const auto& ch : c.checks)
    arr.push_back({{"check", ch.name}, {"passed", ch.passed}, {"required", ch.required}, {"detail", ch.detail}});
  return arr;
}

template <ExactField K>
json decomposition_to_json(const json& algebra, const Decomposition<K>& d, const Certificate& cert,
                           const SearchOptions& opts) {
  json j;
  j["format"] = "wbd-decomposition/1";
  j["input_hash"] = algebra_hash(algebra);
  j["algebra"] = algebra;
  j["seed"] = opts.seed;
  j["search_bound"] = opts.bound;
  j["s_basis"] = subspace_to_json(d.s);
  j["v_basis"] = subspace_to_json(d.v);
  j["rad_basis"] = subspace_to_json(d.rad);
  j["certificate"] = certificate_to_json(cert);
  j["accepted"] = cert.passed();
  j["trace"] = {{"depth", d.trace.depth},
                {"square_zero_lifts", d.trace.square_zero_lifts},
                {"matrix_blocks", d.trace.matrix_blocks},
                {"cayley_blocks", d.trace.cayley_blocks},
                {"principal_path", d.trace.principal_path}};
  return j;
}

/// Bases of a decomposition file; row lengths are checked against the algebra.
template <ExactField K>
Decomposition<K> decomposition_from_json(const json& j, std::size_t n) {
  for (const char* key : {"s_basis", "v_basis", "rad_basis"})
    if (!j.contains(key)) fail(ErrorKind::parse_error, std::string("missing key '") + key + "'");
  Decomposition<K> d;
  d.s = subspace_from_json<K>(j["s_basis"], n);
  d.v = subspace_from_json<K>(j["v_basis"], n);
  d.rad = subspace_from_json<K>(j["rad_basis"], n);
  return d;
}

}  // namespace wbd
