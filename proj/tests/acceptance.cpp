// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the only numeric limits are the counts below and
// the Hensel step bound ceil(log2(dim + 1)).

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "wbd/cli.hpp"

using namespace wbd;
using namespace wbd::testing;
namespace fs = std::filesystem;

namespace {

constexpr int kZornPerturbations = 20;
constexpr std::uint64_t kLiftConjugates = 50;
constexpr std::uint64_t kCayleyConjugates = 25;
constexpr std::uint64_t kDecomposeConjugates = 50;
constexpr std::size_t kCertifiedNilradicalMaxDim = 9;

struct Outcome {
  bool passed = true;
  std::string detail;
  std::size_t cases = 0;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

const std::vector<std::string>& all_fixtures() { return fixture_names(); }

std::string fixture_path(const std::string& name) { return std::string(WBD_FIXTURE_DIR) + "/" + name + ".alg"; }

MatrixUnits<Q> named_units(const Algebra<Q>& a, const std::string& prefix) {
  MatrixUnits<Q> m{2, {}};
  for (const char* ij : {"11", "12", "21", "22"}) m.units.push_back(basis_by_label(a, prefix + ij));
  return m;
}

MatrixUnits<Q> transport(const Conjugate<Q>& c, const LiftContext<Q>& ctx, const MatrixUnits<Q>& m) {
  MatrixUnits<Q> out{m.degree, {}};
  for (const auto& x : m.units) out.units.push_back(ctx.project(c.map(x)));
  return out;
}

// 1 -------------------------------------------------------------------------

Outcome axiom_suite() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    const auto w = check_alternative(fixture<Q>(name).algebra());
    o.require(!w.has_value(), name + " reported non-alternative");
  }
  o.require(!check_alternative(zorn_algebra<Q>()).has_value(), "Zorn reported non-alternative");
  for (int s = 1; s <= kZornPerturbations; ++s) {
    const Algebra<Q> z = perturbed_zorn(static_cast<std::uint64_t>(s));
    const auto w = check_alternative(z);
    o.require(w.has_value(), "perturbation " + std::to_string(s) + " passed as alternative");
    if (!w) continue;
    // recompute the witnessed associator from scratch
    const Vec<Q> value = w->identity == "(x,x,y)" ? associator(z, w->x, w->x, w->y) : associator(z, w->y, w->x, w->x);
    o.require(!is_zero(value) && value == w->value, "perturbation " + std::to_string(s) + " witness does not reproduce");
  }
  return o;
}

// 2 -------------------------------------------------------------------------

// Idempotent systems the engine produces for U: the weight-one idempotent, the
// principal idempotent, and the lifted diagonal of every simple component of
// the principal corner.
std::vector<std::vector<Vec<Q>>> engine_idempotents(const BaricAlgebra<Q>& u) {
  std::vector<std::vector<Vec<Q>>> out;
  out.push_back({find_weight_one_idempotent(u).element});
  const Vec<Q> e = principal_idempotent(u).element;
  out.push_back({e});
  const auto corner = baric_subalgebra(u, peirce_single(u.algebra(), e).component(1, 1));
  const auto ctx = make_lift_context(corner.algebra, b_radical(corner.algebra));
  const auto split = split_semisimple_bar(ctx.quotient.algebra);
  std::vector<Vec<Q>> diag;
  for (const auto& c : present_components(ctx.quotient_algebra(), split.semisimple_part)) {
    const auto d = c.units ? c.units->diagonal() : c.frame->units.diagonal();
    diag.insert(diag.end(), d.begin(), d.end());
  }
  if (!diag.empty()) {
    std::vector<Vec<Q>> lifted;
    for (const auto& x : lift_orthogonal_set(ctx, diag).members) lifted.push_back(corner.embed(x));
    for (const auto& x : lifted) out.push_back({x});
    out.push_back(lifted);
  }
  return out;
}

Outcome peirce_suite() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    const auto u = fixture<Q>(name);
    const auto& a = u.algebra();
    for (const auto& set : engine_idempotents(u)) {
      const auto sys = peirce_set(a, set);
      const auto rel = verify_peirce_relations(a, sys);
      o.require(rel.ok, name + ": " + rel.witness);
      std::size_t total = 0;
      for (std::size_t i = 0; i <= set.size(); ++i)
        for (std::size_t j = 0; j <= set.size(); ++j) total += sys.component(i, j).dim();
      o.require(total == a.dim(), name + ": component dimensions do not add up");
    }
  }
  const auto z = zorn_algebra<Q>();
  const auto s = peirce_single(z, z.basis_vector(0));
  o.require(s.component(1, 1).dim() == 1 && s.component(1, 0).dim() == 3 && s.component(0, 1).dim() == 3 &&
                s.component(0, 0).dim() == 1,
            "Zorn corner dims are not (1,3,3,1)");
  o.require(verify_peirce_relations(z, s).ok, "Zorn Peirce relations fail");
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome radical_suite() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    const auto u = fixture<Q>(name);
    if (u.dim() <= kCertifiedNilradicalMaxDim) {
      const auto r = nilradical(u.algebra());
      o.require(r.ideal && r.chain.nilpotent && r.maximal, name + ": nilradical certificate fails (" + r.detail + ")");
    }
    const auto rad = b_radical(u);
    if (!rad.is_zero()) o.require(b_radical(quotient_baric(u, rad).algebra).is_zero(), name + ": rad(U/rad U) != 0");
  }
  const auto t3 = fixture_t3<Q>();
  o.require(b_radical(t3) == labels_span(t3.algebra(), {"e12"}), "b_radical(T3) != span{e12}");
  o.require(b_radical(fixture_t5<Q>()).is_zero(), "b_radical(T5) != 0");
  return o;
}

// 4 -------------------------------------------------------------------------

Outcome lifting_suite() {
  Outcome o;
  const auto u = fixture_t6<Q>();
  const auto& a0 = u.algebra();
  const auto rad = nilradical(a0).radical;
  const auto units = named_units(a0, "e");
  const std::size_t bound = hensel_step_bound(u.dim());
  for (std::uint64_t seed = 1; seed <= kLiftConjugates; ++seed) {
    const std::string tag = "T6 seed " + std::to_string(seed);
    const auto c = conjugate(u, seed);
    const auto& a = c.algebra.algebra();
    const auto ctx = make_lift_context(c.algebra, c.map(rad));
    const auto bar = transport(c, ctx, units);

    const auto anchor = lift_idempotent(ctx, bar.identity());
    o.require(a.multiply(anchor.element, anchor.element) == anchor.element, tag + ": anchor not idempotent");
    o.require(anchor.steps <= bound, tag + ": Hensel used " + std::to_string(anchor.steps) + " steps");
    for (std::size_t i = 0; i < 2; ++i) {
      const auto e = lift_idempotent(ctx, bar.unit(i, i));
      o.require(a.multiply(e.element, e.element) == e.element, tag + ": lifted idempotent fails e^2 = e");
      o.require(e.steps <= bound, tag + ": Hensel used " + std::to_string(e.steps) + " steps");
    }

    const auto set = lift_orthogonal_set(ctx, bar.diagonal(), std::optional<Vec<Q>>(anchor.element));
    o.require(set.members[0] + set.members[1] == anchor.element, tag + ": anchored sum differs from the anchor");
    for (std::size_t s : set.steps) o.require(s <= bound, tag + ": Hensel step bound exceeded in the set lift");

    const auto f = lift_matrix_units(ctx, bar, std::optional<Vec<Q>>(anchor.element));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) {
            const Vec<Q> p = a.multiply(f.unit(i, j), f.unit(k, l));
            o.require(j == k ? p == f.unit(i, l) : is_zero(p), tag + ": matrix-unit product breaks the table");
          }
    o.require(f.identity() == anchor.element, tag + ": lifted units do not sum to the anchor");
  }
  // unital bar: the lift of the image of the unity f of bar(U) is f
  const auto t6u = fixture_t6u<Q>();
  const auto f = basis_by_label(t6u.algebra(), "e11") + basis_by_label(t6u.algebra(), "e22");
  const auto rad_u = nilradical(t6u.algebra()).radical;
  for (std::uint64_t seed = 1; seed <= kLiftConjugates; ++seed) {
    const auto c = conjugate(t6u, seed);
    const auto ctx = make_lift_context(c.algebra, c.map(rad_u));
    o.require(lift_idempotent(ctx, ctx.project(c.map(f))).element == c.map(f),
              "T6u seed " + std::to_string(seed) + ": lift differs from the unity of bar");
  }
  return o;
}

// 5 -------------------------------------------------------------------------

Outcome cayley_suite() {
  Outcome o;
  const auto u = fixture_t8<Q>();
  const auto& a0 = u.algebra();
  const auto rad = nilradical(a0).radical;
  const auto units = named_units(a0, "e");
  const Vec<Q> w0 = basis_by_label(a0, "we11") + basis_by_label(a0, "we22");
  for (std::uint64_t seed = 1; seed <= kCayleyConjugates; ++seed) {
    const std::string tag = "T8 seed " + std::to_string(seed);
    const auto c = conjugate(u, seed);
    const auto& a = c.algebra.algebra();
    const auto ctx = make_lift_context(c.algebra, c.map(rad));
    const CayleyFrame<Q> bar{transport(c, ctx, units), ctx.project(c.map(w0))};
    const auto lifted = lift_cayley(ctx, bar);
    const auto& fr = lifted.frame;
    o.require(a.multiply(fr.v, fr.v) == fr.units.identity(), tag + ": v^2 != 1");
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        o.require(a.multiply(fr.units.unit(i, j), fr.v) == a.multiply(fr.v, fr.iota(i, j)),
                  tag + ": x v != v iota(x) for e" + std::to_string(i + 1) + std::to_string(j + 1));
    o.require(ctx.project(fr.v) == bar.v, tag + ": projection of v differs from w-bar");
  }
  return o;
}

// 6 -------------------------------------------------------------------------

Outcome end_to_end_suite() {
  Outcome o;
  bool square_zero = false, recursion = false, principal7 = false, principal9 = false;
  for (const auto& name : all_fixtures()) {
    const auto u = fixture<Q>(name);
    for (std::uint64_t seed = 0; seed <= kDecomposeConjugates; ++seed) {
      const std::string tag = name + (seed ? " seed " + std::to_string(seed) : "");
      const BaricAlgebra<Q> v = seed ? conjugate(u, seed).algebra : u;
      const SearchOptions opts{seed, 3, 4000};
      const auto d = decompose(v, opts);
      const auto cert = verify_decomposition(v, d, opts);
      o.require(cert.checks.size() == 7, tag + ": certificate does not have 7 checks");
      for (const auto& ch : cert.checks) o.require(ch.passed, tag + ": check " + ch.name + " fails (" + ch.detail + ")");
      o.require(d.s.dim() + d.v.dim() + d.rad.dim() == v.dim(), tag + ": dimensions do not add up");
      if (name == "t5" && d.trace.square_zero_lifts > 0) square_zero = true;
      if (name == "t9" && d.trace.principal_path) principal9 = true;
      if (name == "t7" && d.trace.principal_path) principal7 = true;
      if (name == "t4" && d.trace.depth >= 2 && ideal_power_chain(v.algebra(), d.rad).nil_index == 4) recursion = true;
    }
  }
  o.require(square_zero, "J^2 = 0 branch not exercised by T5");
  o.require(recursion, "rad^2 != 0 recursion not exercised by T4 (nilpotency index 4)");
  o.require(principal7 && principal9, "principal-idempotent path not exercised by T7 and T9");
  return o;
}

// 7 -------------------------------------------------------------------------

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "wbd_acceptance") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& n) const { return (path / n).string(); }
};

Outcome negative_controls() {
  Outcome o;
  TempDir tmp;
  struct Doctor {
    std::string fixture, expected;
    std::function<void(json&)> edit;
  };
  const std::vector<Doctor> doctors = {
      {"t9", "rad-matches",
       [](json& j) {
         j["v_basis"].push_back(j["rad_basis"][0]);
         j["rad_basis"].erase(0);
       }},
      {"t12", "s-subalgebra",
       [](json& j) {
         // add a radical vector to the first weight-zero row of S
         for (auto& row : j["s_basis"]) {
           if (row[0] != "0") continue;
           for (std::size_t k = 0; k < row.size(); ++k)
             row[k] = (Q::parse(row[k].get<std::string>()) + Q::parse(j["rad_basis"][0][k].get<std::string>())).str();
           break;
         }
       }},
      {"t5", "v-in-bar",
       [](json& j) {
         json one = json::array();
         for (std::size_t k = 0; k < j["algebra"]["dim"].get<std::size_t>(); ++k) one.push_back(k == 0 ? "1" : "0");
         j["v_basis"].push_back(one);
       }},
  };
  for (const auto& doc : doctors) {
    const std::string out = tmp.file(doc.fixture + ".dec");
    std::ostringstream so, se;
    o.require(run_command({"decompose", fixture_path(doc.fixture), "-o", out}, so, se) == 0,
              doc.fixture + ": decompose failed: " + se.str());
    json j = parse_json_text(read_text_file(out));
    doc.edit(j);
    const std::string bad = tmp.file(doc.fixture + ".bad.dec");
    std::ofstream(bad) << pretty_json(j);

    const json back = parse_json_text(read_text_file(bad));
    const auto u = algebra_from_json<Q>(back["algebra"]);
    const auto cert = verify_decomposition(u, decomposition_from_json<Q>(back, u.dim()));
    const Check* c = cert.find(doc.expected);
    o.require(!cert.passed() && c && !c->passed, doc.fixture + ": " + doc.expected + " did not fail");

    std::ostringstream vo, ve;
    const int code = run_command({"verify", bad}, vo, ve);
    o.require(code == 1 && ve.str().find(doc.expected) != std::string::npos,
              doc.fixture + ": verify did not name " + doc.expected);
  }
  return o;
}

// 8 -------------------------------------------------------------------------

Outcome determinism() {
  Outcome o;
  TempDir tmp;
  std::vector<std::string> inputs;
  for (const auto& name : all_fixtures()) inputs.push_back(fixture_path(name));
  for (const char* name : {"t6", "t8", "t9"}) {
    const std::string p = tmp.file(std::string(name) + ".conj.alg");
    std::ofstream(p) << pretty_json(algebra_to_json(conjugate(fixture<Q>(name), 17).algebra));
    inputs.push_back(p);
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string bytes[2];
    for (int r = 0; r < 2; ++r) {
      const std::string out = tmp.file("run" + std::to_string(r) + "_" + std::to_string(i) + ".dec");
      std::ostringstream so, se;
      o.require(run_command({"decompose", inputs[i], "--seed", "7", "-o", out}, so, se) == 0, inputs[i] + ": " + se.str());
      bytes[r] = read_text_file(out);
    }
    o.require(!bytes[0].empty() && bytes[0] == bytes[1], inputs[i] + ": decomposition files differ");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 axiom suite", axiom_suite},           {"2 Peirce suite", peirce_suite},
      {"3 radical suite", radical_suite},       {"4 lifting suite", lifting_suite},
      {"5 Cayley suite", cayley_suite},         {"6 end-to-end decomposition", end_to_end_suite},
      {"7 negative controls", negative_controls}, {"8 determinism", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << c.label << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.cases << " checks, "
         << static_cast<long>(secs * 10) / 10.0 << " s)";
    if (!o.passed) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    all = all && o.passed;
  }
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
