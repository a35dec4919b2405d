#pragma once

// Command-line front end: check, radical, bradical, peirce, decompose, verify.
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wbd/io.hpp"

namespace wbd {

namespace cli_detail {

enum class Format { machine, human };

struct Options {
  std::string command;
  std::string file;
  std::string output;
  std::string idempotent;
  bool principal = false;
  std::uint64_t seed = 0;
  int bound = 3;
  Format format = Format::machine;

  SearchOptions search() const {
    SearchOptions o;
    o.seed = seed;
    o.bound = bound;
    return o;
  }
};

struct Reply {
  int code = 0;
  json body;
  std::vector<std::string> summary;  ///< human-format lines
  std::string failure;               ///< printed to stderr when code != 0
};

template <ExactField K>
json subspace_report(const Subspace<K>& s) {
  return {{"dim", s.dim()}, {"basis", subspace_to_json(s)}};
}

template <ExactField K>
Reply run_check(const json& file) {
  RawAlgebra<K> raw = raw_algebra_from_json<K>(file);
  const Algebra<K>& a = raw.algebra;
  Reply r;
  r.body["command"] = "check";
  const auto alt = check_alternative(a);
  json aj{{"passed", !alt.has_value()}};
  if (alt)
    aj["witness"] = {{"identity", alt->identity},
                     {"x", vector_to_json(alt->x)},
                     {"y", vector_to_json(alt->y)},
                     {"associator", vector_to_json(alt->value)}};
  r.body["alternative"] = aj;
  const WeightCheck w = check_weight(a, raw.weight);
  json wj{{"passed", w.ok}, {"message", w.message}};
  if (w.witness) wj["witness"] = {a.label(w.witness->first), a.label(w.witness->second)};
  r.body["weight"] = wj;
  r.body["unital"] = find_identity(a).has_value();
  r.summary.push_back(std::string("alternative: ") + (alt ? "FAIL " + alt->identity : "pass"));
  r.summary.push_back(std::string("weight: ") + (w.ok ? "pass" : "FAIL " + w.message));
  if (alt || !w.ok) {
    r.code = 1;
    r.failure = alt ? "not-alternative: associator " + alt->identity + " is nonzero" : "invalid-weight: " + w.message;
  }
  return r;
}

template <ExactField K>
Reply run_radical(const json& file, const Options& o) {
  const BaricAlgebra<K> u = algebra_from_json<K>(file);
  const NilradicalResult<K> n = nilradical(u.algebra(), o.search());
  Reply r;
  r.body["command"] = "radical";
  r.body["nilradical"] = subspace_report(n.radical);
  json chain = json::array();
  for (const auto& c : n.chain.chain) chain.push_back(c.dim());
  r.body["certificate"] = {{"method", n.method},
                           {"ideal", n.ideal},
                           {"nilpotent", n.chain.nilpotent},
                           {"nil_index", n.chain.nil_index},
                           {"power_chain_dims", chain},
                           {"maximal", n.maximal},
                           {"certified", n.certified()}};
  r.summary.push_back("dim R(U) = " + std::to_string(n.radical.dim()) + " via " + n.method +
                      (n.certified() ? ", certified" : ", NOT certified"));
  if (!n.certified()) {
    r.code = 1;
    r.failure = "verification-failure: " + n.detail;
  }
  return r;
}

template <ExactField K>
Reply run_bradical(const json& file, const Options& o) {
  const BaricAlgebra<K> u = algebra_from_json<K>(file);
  const RadicalReport<K> rep = radical_report(u, o.search());
  Reply r;
  r.body["command"] = "bradical";
  r.body["bar"] = subspace_report(bar_ideal(u));
  r.body["bar_square"] = subspace_report(bar_square(u));
  r.body["nilradical"] = subspace_report(rep.nilradical);
  r.body["b_radical"] = subspace_report(rep.b_radical);
  r.body["b_semisimple"] = rep.b_semisimple;
  r.summary.push_back("dim rad(U) = " + std::to_string(rep.b_radical.dim()) +
                      (rep.b_semisimple ? " (b-semisimple)" : ""));
  return r;
}

template <ExactField K>
Vec<K> parse_coordinates(const std::string& text, std::size_t n) {
  Vec<K> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(K::parse(item));
  if (v.size() != n)
    fail(ErrorKind::dimension_mismatch, "idempotent has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(n));
  return v;
}

template <ExactField K>
Reply run_peirce(const json& file, const Options& o) {
  const BaricAlgebra<K> u = algebra_from_json<K>(file);
  const Algebra<K>& a = u.algebra();
  Vec<K> e;
  if (o.principal) {
    e = principal_idempotent(u, o.search()).element;
  } else {
    e = parse_coordinates<K>(o.idempotent, a.dim());
  }
  const PeirceSystem<K> p = peirce_single(a, e);
  const PeirceRelationCheck rel = verify_peirce_relations(a, p);
  Reply r;
  r.body["command"] = "peirce";
  r.body["idempotent"] = vector_to_json(e);
  json comps;
  std::string dims;
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 0}, {0, 1}, {0, 0}}) {
    const std::string key = "U" + std::to_string(i) + std::to_string(j);
    comps[key] = subspace_report(p.component(i, j));
    dims += (dims.empty() ? "" : ",") + std::to_string(p.component(i, j).dim());
  }
  r.body["components"] = comps;
  r.body["relations"] = {{"passed", rel.ok}, {"witness", rel.witness}};
  r.summary.push_back("corner dims (U11,U10,U01,U00) = (" + dims + ")");
  r.summary.push_back(std::string("relations: ") + (rel.ok ? "pass" : "FAIL " + rel.witness));
  if (!rel.ok) {
    r.code = 1;
    r.failure = "verification-failure: Peirce relation " + rel.witness;
  }
  return r;
}

template <ExactField K>
Reply run_decompose(const json& file, const Options& o) {
  AlgebraMetadata meta;
  const BaricAlgebra<K> u = algebra_from_json<K>(file, &meta);
  const SearchOptions opts = o.search();
  const Decomposition<K> d = decompose(u, opts);
  const Certificate cert = verify_decomposition(u, d, opts);
  Reply r;
  r.body = decomposition_to_json(algebra_to_json(u, meta), d, cert, opts);
  r.summary.push_back("dim S = " + std::to_string(d.s.dim()) + ", dim V = " + std::to_string(d.v.dim()) +
                      ", dim rad = " + std::to_string(d.rad.dim()));
  r.summary.push_back(std::string("certificate: ") + (cert.passed() ? "all checks pass" : "FAILED"));
  return r;
}

template <ExactField K>
Reply run_verify(const json& file) {
  if (!file.contains("algebra")) fail(ErrorKind::parse_error, "decomposition file has no algebra echo");
  const BaricAlgebra<K> u = algebra_from_json<K>(file["algebra"]);
  SearchOptions opts;
  if (file.contains("seed")) opts.seed = file["seed"].get<std::uint64_t>();
  if (file.contains("search_bound")) opts.bound = file["search_bound"].get<int>();
  const Decomposition<K> d = decomposition_from_json<K>(file, u.dim());
  Certificate cert = verify_decomposition(u, d, opts);
  const bool hash_ok = file.contains("input_hash") && file["input_hash"] == algebra_hash(file["algebra"]);
  cert.checks.insert(cert.checks.begin(), Check{"input-hash", hash_ok, true, hash_ok ? "ok" : "input_hash does not match the algebra echo"});
  Reply r;
  r.body["command"] = "verify";
  r.body["certificate"] = certificate_to_json(cert);
  r.body["accepted"] = cert.passed();
  for (const auto& c : cert.checks)
    r.summary.push_back(c.name + ": " + (c.passed ? "pass" : (c.required ? "FAIL " : "info ") + c.detail));
  if (!cert.passed()) {
    r.code = 1;
    std::string names;
    for (const auto& n : cert.failing()) names += (names.empty() ? "" : ", ") + n;
    r.failure = "verification-failure: failing checks: " + names;
  }
  return r;
}

template <ExactField K>
Reply dispatch(const json& file, const Options& o) {
  if (o.command == "check") return run_check<K>(file);
  if (o.command == "radical") return run_radical<K>(file, o);
  if (o.command == "bradical") return run_bradical<K>(file, o);
  if (o.command == "peirce") return run_peirce<K>(file, o);
  if (o.command == "decompose") return run_decompose<K>(file, o);
  return run_verify<K>(file);
}

}  // namespace cli_detail

/// Runs one command; args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"Exact Peirce, radical and Wedderburn b-decomposition engine", "wbd"};
  app.require_subcommand(1);
  std::map<std::string, Format> formats{{"machine", Format::machine}, {"human", Format::human}};
  auto add_common = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("file", o.file, what)->required();
    sub->add_option("--format", o.format, "machine (JSON) or human")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--seed", o.seed, "seed for bounded searches");
    sub->add_option("--search-bound", o.bound, "integer coefficient range for searches")->check(CLI::Range(1, 1000));
  };
  add_common(app.add_subcommand("check", "alternative and weight axioms, with witnesses"), "algebra file");
  add_common(app.add_subcommand("radical", "nilradical with certificate"), "algebra file");
  add_common(app.add_subcommand("bradical", "b-radical bar(U)^2 ∩ R(U)"), "algebra file");
  CLI::App* peirce = app.add_subcommand("peirce", "Peirce decomposition for one idempotent");
  add_common(peirce, "algebra file");
  auto* idem = peirce->add_option("--idempotent", o.idempotent, "comma-separated coordinates");
  auto* princ = peirce->add_flag("--principal", o.principal, "use the principal idempotent");
  idem->excludes(princ);
  CLI::App* dec = app.add_subcommand("decompose", "Wedderburn b-decomposition with certificate");
  add_common(dec, "algebra file");
  dec->add_option("--output,-o", o.output, "write the decomposition file here instead of stdout");
  add_common(app.add_subcommand("verify", "re-check a decomposition file"), "decomposition file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.command == "peirce" && o.idempotent.empty() && !o.principal) {
    err << "usage error: peirce needs --idempotent <coords> or --principal\n" << peirce->help();
    return 2;
  }

  std::string text;
  try {
    text = read_text_file(o.file);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Reply reply;
  try {
    const json file = parse_json_text(text);
    const json& alg = o.command == "verify" ? (file.contains("algebra") ? file["algebra"] : file) : file;
    if (!alg.is_object() || !alg.contains("field")) fail(ErrorKind::parse_error, "missing key 'field'");
    const FieldSpec field = parse_field(alg["field"]);
    if (field.rational()) {
      reply = dispatch<Rational>(file, o);
    } else {
      ModP::Scope scope(field.prime);
      reply = dispatch<ModP>(file, o);
    }
  } catch (const Error& e) {
    err << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }

  std::string rendered;
  if (o.format == Format::human) {
    for (const auto& line : reply.summary) rendered += line + "\n";
  } else {
    rendered = pretty_json(reply.body);
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write '" << o.output << "'\n";
      return 2;
    }
    f << pretty_json(reply.body);
    if (o.format == Format::human) out << rendered;
  } else {
    out << rendered;
  }
  if (reply.code != 0) err << "error: " << reply.failure << "\n";
  return reply.code;
}

}  // namespace wbd
