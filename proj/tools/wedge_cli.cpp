// Command-line front end: normalize polynomials, test centrality and
// identity, decide bounded-degree T-space membership, print separating
// witnesses, and run the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wedge/central.hpp"
#include "wedge/errors.hpp"
#include "wedge/normal_form.hpp"
#include "wedge/parse.hpp"
#include "wedge/suites.hpp"
#include "wedge/tspace.hpp"
#include "wedge/witness.hpp"

using json = nlohmann::ordered_json;

namespace {

struct SessionConfig {
  uint32_t p = 0;
  bool unitary = false;
  uint32_t truncation = 0;  // 0: derived from the input degree
  uint32_t cap = 0;         // 0: substitution cap defaults to the type degree
  uint64_t seed = 0x5EEDBEEF;
  std::string format = "text";
  bool mod_identities = false;

  wedge::Characteristic ch() const { return wedge::Characteristic(p); }
  bool structured() const { return format != "text"; }
};

void add_common_flags(CLI::App* cmd, SessionConfig& cfg) {
  cmd->add_option("--p", cfg.p, "field characteristic: 0 or an odd prime")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--unitary", cfg.unitary, "work in the unitary algebra");
  cmd->add_option("--n", cfg.truncation, "Grassmann generator bound");
  cmd->add_option("--cap", cfg.cap, "substitution length cap for spans");
  cmd->add_option("--seed", cfg.seed, "random seed for the suites");
  cmd->add_option("--format", cfg.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
}

std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<uint32_t> parse_type(const std::string& text) {
  std::vector<uint32_t> type;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    type.push_back(static_cast<uint32_t>(std::stoul(item)));
  }
  if (type.empty()) throw wedge::TypeMismatch("empty multidegree type");
  return type;
}

int cmd_normalize(const SessionConfig& cfg, const std::vector<std::string>& inputs) {
  for (const std::string& text : inputs) {
    wedge::FreePoly f = wedge::parse_poly(text, cfg.ch(), cfg.unitary);
    wedge::ReductionMode mode = cfg.mod_identities
                                    ? wedge::ReductionMode::TripleCommutatorAndPthPowers
                                    : wedge::ReductionMode::TripleCommutator;
    wedge::NormalForm nf = wedge::normalize(f, mode);
    if (cfg.structured()) {
      json out;
      out["schema_version"] = 1;
      out["input"] = text;
      out["normal_form"] = nf.str();
      out["modulus"] = cfg.mod_identities ? "T3+xp" : "T3";
      json terms = json::array();
      if (!nf.constant.is_zero()) {
        terms.push_back({{"term", "1"}, {"coeff", nf.constant.str()}, {"class", "R1"}});
      }
      for (const auto& [term, c] : nf.terms) {
        wedge::Classification cl = wedge::classify(term, cfg.ch(), cfg.unitary);
        terms.push_back({{"term", term.str()}, {"coeff", c.str()}, {"class", cl.str()}});
      }
      out["terms"] = terms;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << nf.str() << "\n";
      if (!nf.constant.is_zero()) {
        std::cout << "  1: R1 (constant)\n";
      }
      for (const auto& [term, c] : nf.terms) {
        wedge::Classification cl = wedge::classify(term, cfg.ch(), cfg.unitary);
        std::cout << "  " << term.str() << ": " << cl.str() << "\n";
      }
    }
  }
  return 0;
}

int cmd_verdict(const SessionConfig& cfg, const std::vector<std::string>& inputs,
                bool identity_only) {
  int rc = 0;
  for (const std::string& text : inputs) {
    wedge::FreePoly f = wedge::parse_poly(text, cfg.ch(), cfg.unitary);
    uint32_t d = f.total_degree();
    uint32_t trunc = cfg.truncation ? cfg.truncation : std::max(2 * d, d + 2);
    wedge::VerdictResult res = wedge::classify_polynomial(f, cfg.unitary, trunc);
    std::string verdict = wedge::verdict_str(res.verdict);
    if (identity_only) {
      verdict = res.verdict == wedge::Verdict::Identity ? "identity" : "not-an-identity";
    }
    if (cfg.structured()) {
      json out;
      out["schema_version"] = 1;
      out["input"] = text;
      out["truncation"] = trunc;
      out["verdict"] = verdict;
      out["scope"] = "infinite field of this characteristic";
      if (res.falsifier) {
        json fj;
        for (const auto& [v, g] : *res.falsifier) fj["x" + std::to_string(v)] = g.str();
        out["falsifier"] = fj;
      }
      if (!res.note.empty()) out["note"] = res.note;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << verdict << "  (generic over an infinite field, truncation " << trunc << ")\n";
      if (res.falsifier) {
        std::cout << "  falsifying assignment:\n";
        for (const auto& [v, g] : *res.falsifier) {
          std::cout << "    x" << v << " -> " << g.str() << "\n";
        }
      }
      if (!res.note.empty()) std::cout << "  note: " << res.note << "\n";
    }
    if (res.verdict == wedge::Verdict::Neither) rc = 1;
  }
  return identity_only ? 0 : rc;
}

int cmd_member(const SessionConfig& cfg, const std::string& set_name, const std::string& type_text,
               const std::vector<std::string>& inputs) {
  static const std::map<std::string, wedge::BuiltinSet> names = {
      {"S", wedge::BuiltinSet::S},     {"S1", wedge::BuiltinSet::S1},
      {"T3", wedge::BuiltinSet::T3},   {"TG0", wedge::BuiltinSet::TG0},
      {"CPG0", wedge::BuiltinSet::CPG0}, {"CPG", wedge::BuiltinSet::CPG}};
  auto it = names.find(set_name);
  if (it == names.end()) {
    std::cerr << "unknown generator set '" << set_name << "' (S S1 T3 TG0 CPG0 CPG)\n";
    return 2;
  }
  std::vector<uint32_t> type = parse_type(type_text);
  uint32_t total = 0;
  for (uint32_t r : type) total += r;
  uint32_t bound = cfg.p > 2 ? total / (2 * cfg.p) + 1 : 1;
  wedge::GeneratorSet gens = wedge::builtin_generators(it->second, cfg.ch(), bound);
  if (gens.unitary != cfg.unitary) gens = wedge::with_unitarity(gens, cfg.unitary);
  wedge::TSpaceBasis basis = wedge::span_at_type(gens, type, cfg.cap);
  int rc = 0;
  for (const std::string& text : inputs) {
    wedge::FreePoly f = wedge::parse_poly(text, cfg.ch(), cfg.unitary);
    wedge::Membership v = wedge::member(f, basis);
    bool yes = v == wedge::Membership::Yes;
    if (cfg.structured()) {
      json out;
      out["schema_version"] = 1;
      out["input"] = text;
      out["set"] = set_name;
      out["type"] = type;
      out["cap"] = basis.cap;
      out["dimension"] = basis.dimension();
      out["member"] = yes ? "yes" : "no-at-this-cap";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (yes ? "yes" : "no-at-this-cap") << " (set " << set_name << ", dimension "
                << basis.dimension() << ", cap " << basis.cap << ")\n";
    }
    if (!yes) rc = 1;
  }
  return rc;
}

int cmd_witness(const SessionConfig& cfg, uint32_t m, uint32_t n, const std::string& type_text,
                const std::vector<std::string>& inputs) {
  int rc = 0;
  for (const std::string& text : inputs) {
    wedge::FreePoly f = wedge::parse_poly(text, cfg.ch(), cfg.unitary);
    wedge::NormalForm nf = wedge::normalize(f, wedge::ReductionMode::TripleCommutator);
    if (nf.terms.size() != 1 || !nf.constant.is_zero() ||
        !nf.terms.begin()->second.is_one()) {
      std::cerr << "witnesses need a single normal term with coefficient 1; normal form was: "
                << nf.str() << "\n";
      return 2;
    }
    const wedge::NormalTerm& u = nf.terms.begin()->first;
    wedge::WitnessAssignment wa;
    if (cfg.unitary) {
      std::vector<uint32_t> type = type_text.empty() ? std::vector<uint32_t>() : parse_type(type_text);
      if (type.empty()) {
        type.assign(n, 0);
        for (uint32_t v = 1; v <= n; ++v) type[v - 1] = u.degree_of(v);
      }
      wa = wedge::unital_separating_assignment(u, m, n, type, cfg.ch());
    } else {
      wa = wedge::separating_assignment(u, m, n, cfg.ch());
    }
    wedge::GrassmannElement value = wedge::expand(u, cfg.ch(), cfg.unitary).evaluate(wa.images);
    if (cfg.structured()) {
      json out;
      out["schema_version"] = 1;
      out["term"] = u.str();
      out["z"] = wa.z;
      json imgs;
      for (const auto& [v, g] : wa.images) imgs["x" + std::to_string(v)] = g.str();
      out["assignment"] = imgs;
      out["value"] = value.str();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "term: " << u.str() << "\n";
      std::cout << "z = " << wa.z << "\n";
      for (const auto& [v, g] : wa.images) {
        std::cout << "  x" << v << " -> " << g.str() << "\n";
      }
      std::cout << "value: " << value.str() << "\n";
    }
  }
  return rc;
}

int cmd_span(const SessionConfig& cfg, const std::string& set_name, const std::string& type_text) {
  static const std::map<std::string, wedge::BuiltinSet> names = {
      {"S", wedge::BuiltinSet::S},     {"S1", wedge::BuiltinSet::S1},
      {"T3", wedge::BuiltinSet::T3},   {"TG0", wedge::BuiltinSet::TG0},
      {"CPG0", wedge::BuiltinSet::CPG0}, {"CPG", wedge::BuiltinSet::CPG}};
  auto it = names.find(set_name);
  if (it == names.end()) {
    std::cerr << "unknown generator set '" << set_name << "' (S S1 T3 TG0 CPG0 CPG)\n";
    return 2;
  }
  std::vector<uint32_t> type = parse_type(type_text);
  uint32_t total = 0;
  for (uint32_t r : type) total += r;
  uint32_t bound = cfg.p > 2 ? total / (2 * cfg.p) + 1 : 1;
  wedge::GeneratorSet gens = wedge::builtin_generators(it->second, cfg.ch(), bound);
  if (gens.unitary != cfg.unitary) gens = wedge::with_unitarity(gens, cfg.unitary);
  wedge::TSpaceBasis basis = wedge::span_at_type(gens, type, cfg.cap);
  if (cfg.structured()) {
    json out;
    out["schema_version"] = 1;
    out["set"] = set_name;
    out["type"] = type;
    out["cap"] = basis.cap;
    out["instances"] = basis.instances_seen;
    json rows = json::array();
    for (size_t r = 0; r < basis.dimension(); ++r) {
      rows.push_back({{"poly", basis.row_poly(r).str()}, {"provenance", basis.provenance[r]}});
    }
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  } else {
    for (size_t r = 0; r < basis.dimension(); ++r) {
      std::cout << basis.row_poly(r).str() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const SessionConfig& cfg, const std::string& group,
               const std::vector<uint32_t>& only_primes, uint32_t max_degree) {
  wedge::suites::SuiteConfig sc;
  sc.seed = cfg.seed;
  if (!only_primes.empty()) sc.primes = only_primes;
  if (cfg.p != 0) sc.witness_prime = cfg.p;
  if (max_degree != 0) {
    sc.span_nonunitary_max_degree = max_degree;
    sc.span_unitary_max_degree = std::min(max_degree, sc.span_unitary_max_degree);
  }
  std::vector<wedge::suites::CheckResult> results = wedge::suites::run_group(group, sc);
  bool all = true;
  json jout = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (cfg.structured()) {
      jout.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]\n";
    }
  }
  if (cfg.structured()) {
    std::cout << json{{"schema_version", 1}, {"results", jout}}.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in truncated Grassmann algebras: normal forms, central "
               "polynomials, T-space membership"};
  app.require_subcommand(1);
  SessionConfig cfg;

  std::vector<std::string> inputs;
  std::string set_name, type_text;
  uint32_t m = 1, n = 1, max_degree = 0;
  std::vector<uint32_t> only_primes;

  CLI::App* c_norm = app.add_subcommand("normalize", "rewrite into normal form modulo T^(3)");
  add_common_flags(c_norm, cfg);
  c_norm->add_flag("--mod-identities", cfg.mod_identities,
                   "additionally reduce modulo p-th powers");
  c_norm->add_option("poly", inputs, "polynomials (or stdin, one per line)")->allow_extra_args(false);

  CLI::App* c_central = app.add_subcommand("is-central", "identity / central / neither verdict");
  add_common_flags(c_central, cfg);
  c_central->add_option("poly", inputs, "polynomials (or stdin, one per line)")->allow_extra_args(false);

  CLI::App* c_ident = app.add_subcommand("is-identity", "identity verdict only");
  add_common_flags(c_ident, cfg);
  c_ident->add_option("poly", inputs, "polynomials (or stdin, one per line)")->allow_extra_args(false);

  CLI::App* c_member = app.add_subcommand("member", "bounded-degree T-space membership");
  add_common_flags(c_member, cfg);
  c_member->add_option("--set", set_name, "generator set: S S1 T3 TG0 CPG0 CPG")->required();
  c_member->add_option("--type", type_text, "multidegree, e.g. 3,1")->required();
  c_member->add_option("poly", inputs, "polynomials (or stdin, one per line)")->allow_extra_args(false);

  CLI::App* c_span = app.add_subcommand("span", "print a row-reduced T-space basis at a type");
  add_common_flags(c_span, cfg);
  c_span->add_option("--set", set_name, "generator set: S S1 T3 TG0 CPG0 CPG")->required();
  c_span->add_option("--type", type_text, "multidegree, e.g. 3,1")->required();

  CLI::App* c_wit = app.add_subcommand("witness", "separating Grassmann substitution");
  add_common_flags(c_wit, cfg);
  c_wit->add_option("--m", m, "index of the distinguished beginning variable")->required();
  c_wit->add_option("--family-n", n, "number of variables of the family")->required();
  c_wit->add_option("--type", type_text, "degree vector for the unital families");
  c_wit->add_option("poly", inputs, "family members (or stdin)")->allow_extra_args(false);

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suites");
  add_common_flags(c_verify, cfg);
  std::string group = "all";
  c_verify->add_option("group", group, "lemmas | normalization | witnesses | theorems | all");
  c_verify->add_option("--only-p", only_primes, "restrict the characteristic list");
  c_verify->add_option("--max-degree", max_degree, "cap the span-equality degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_norm->parsed()) return cmd_normalize(cfg, gather_inputs(inputs));
    if (c_central->parsed()) return cmd_verdict(cfg, gather_inputs(inputs), false);
    if (c_ident->parsed()) return cmd_verdict(cfg, gather_inputs(inputs), true);
    if (c_member->parsed()) return cmd_member(cfg, set_name, type_text, gather_inputs(inputs));
    if (c_span->parsed()) return cmd_span(cfg, set_name, type_text);
    if (c_wit->parsed()) return cmd_witness(cfg, m, n, type_text, gather_inputs(inputs));
    if (c_verify->parsed()) return cmd_verify(cfg, group, only_primes, max_degree);
  } catch (const wedge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
