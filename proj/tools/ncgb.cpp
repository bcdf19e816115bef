#include "ncgb/center.hpp"
#include "ncgb/decomp.hpp"
#include "ncgb/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ncgb;

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kVerificationFailure = 1, kResourceBound = 2, kInputError = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int matrix_n = 0;
  std::string input;
  std::string mode = "full";
  int max_degree = 0;
  std::string format = "text";
  std::string output;
  int jobs = 0;
  std::string left, right;  // mul operands
};

struct Report {
  int code = kPass;
  std::ostringstream text;
  json doc = json::object();
};

const char* pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

void progress(const std::string& msg) { std::cerr << "ncgb: " << msg << '\n'; }

std::size_t degree_bound(const RunConfig& cfg) {
  if (cfg.max_degree != 0) {
    if (cfg.max_degree < 3) throw InputError("--max-degree must be at least 3");
    return static_cast<std::size_t>(cfg.max_degree);
  }
  if (const char* env = std::getenv("NCGB_MAX_DEGREE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 3) throw InputError("NCGB_MAX_DEGREE must be an integer >= 3");
    return static_cast<std::size_t>(v);
  }
  return 0;
}

RelationMode relation_mode(const RunConfig& cfg) { return cfg.mode == "paper" ? RelationMode::indexed : RelationMode::full; }

TripleSystem load_system(const RunConfig& cfg) {
  if ((cfg.matrix_n != 0) == !cfg.input.empty()) throw InputError("give exactly one of --matrix-n and --input");
  if (cfg.matrix_n != 0) {
    if (cfg.matrix_n < 2) throw InputError("--matrix-n must be at least 2");
    return matrix_ajts(cfg.matrix_n);
  }
  std::ifstream in(cfg.input);
  if (!in) throw InputError("cannot read " + cfg.input);
  try {
    return triple_system_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(cfg.input + ": " + e.what());
  } catch (const ParseError& e) {
    throw InputError(cfg.input + ": " + e.what());
  }
}

int require_matrix(const RunConfig& cfg) {
  if (cfg.matrix_n == 0) throw InputError(cfg.command + " needs --matrix-n");
  return cfg.matrix_n;
}

EnvelopeRelations relations(const RunConfig& cfg, const TripleSystem& t) {
  try {
    return envelope_relations(t, relation_mode(cfg));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

EnvelopeAlgebra envelope(const RunConfig& cfg) {
  TripleSystem t = load_system(cfg);
  EnvelopeOptions opts;
  opts.mode = relation_mode(cfg);
  opts.max_degree = degree_bound(cfg);
  opts.progress = progress;
  try {
    return EnvelopeAlgebra::build(t, opts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json alphabet_json(const Alphabet& a) {
  json names = json::array();
  for (Symbol s = 0; s < static_cast<Symbol>(a.size()); ++s) names.push_back(a.name(s));
  return names;
}

std::string render_vec(const TripleVec& v, const Alphabet& a) { return render(embed(v), a); }

std::string tuple_str(const std::vector<int>& tuple) {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) s += (k ? "," : "") + std::to_string(tuple[k] + 1);
  return s + ")";
}

// Commands

void cmd_check(const RunConfig& cfg, Report& r) {
  TripleSystem t = load_system(cfg);
  AxiomReport rep = check_axioms(t);
  Alphabet a = t.alphabet();
  r.doc["status"] = rep.ok() ? "pass" : "fail";
  r.doc["dim"] = t.dim();
  r.doc["triples_checked"] = rep.triples_checked;
  r.doc["quintuples_checked"] = rep.quintuples_checked;
  r.doc["sampled"] = rep.sampled;
  r.text << "axioms: " << pass_fail(rep.ok()) << '\n';
  r.text << "triples checked: " << rep.triples_checked << '\n';
  r.text << "quintuples checked: " << rep.quintuples_checked << (rep.sampled ? " (sampled)" : " (exhaustive)") << '\n';
  if (rep.violation) {
    const auto& v = *rep.violation;
    const char* kind = v.kind == AxiomViolation::Kind::antisymmetry ? "antisymmetry" : "identity";
    json tuple = json::array();
    for (int x : v.tuple) tuple.push_back(x + 1);
    r.doc["violation"] = {{"kind", kind}, {"tuple", tuple}, {"lhs", render_vec(v.lhs, a)}, {"rhs", render_vec(v.rhs, a)}};
    r.text << "violation: " << kind << " at " << tuple_str(v.tuple) << '\n';
    r.text << "  lhs: " << render_vec(v.lhs, a) << '\n';
    r.text << "  rhs: " << render_vec(v.rhs, a) << '\n';
    r.code = kVerificationFailure;
  }
}

void cmd_gb(const RunConfig& cfg, Report& r) {
  TripleSystem t = load_system(cfg);
  EnvelopeRelations rel = relations(cfg, t);
  std::size_t bound = degree_bound(cfg);
  if (bound == 0) bound = default_max_degree(rel.generators);
  CompletionResult res = complete(rel.generators, bound, progress);
  json elements = json::array();
  for (const auto& g : res.system.elements()) {
    elements.push_back(render(g, rel.alphabet));
    r.text << render(g, rel.alphabet) << '\n';
  }
  r.doc["alphabet"] = alphabet_json(rel.alphabet);
  r.doc["order"] = "deglex";
  r.doc["elements"] = elements;
  if (!res.ok()) {
    r.doc["status"] = "degree_bound_exceeded";
    r.doc["max_degree"] = bound;
    r.doc["offending"] = render(*res.offending, rel.alphabet);
    std::cerr << "ncgb: degree bound " << bound << " exceeded by a composition of degree " << res.offending_degree
              << ": " << render(*res.offending, rel.alphabet) << '\n';
    r.code = kResourceBound;
  }
}

NormalWordReport growth_report(const RunConfig& cfg, Alphabet& alphabet, AvoidanceGraph* graph, Report& r) {
  TripleSystem t = load_system(cfg);
  EnvelopeRelations rel = relations(cfg, t);
  alphabet = rel.alphabet;
  std::size_t bound = degree_bound(cfg);
  if (bound == 0) bound = default_max_degree(rel.generators);
  CompletionResult res = complete(rel.generators, bound, progress);
  if (!res.ok()) {
    std::cerr << "ncgb: degree bound " << bound << " exceeded by a composition of degree " << res.offending_degree
              << '\n';
    r.code = kResourceBound;
    return {};
  }
  if (graph != nullptr) *graph = avoidance_graph(res.system, rel.alphabet.size());
  return normal_words(res.system, rel.alphabet.size(), bound);
}

void cmd_dim(const RunConfig& cfg, Report& r) {
  Alphabet a = Alphabet::generic(0);
  NormalWordReport w = growth_report(cfg, a, nullptr, r);
  if (r.code != kPass) return;
  r.doc["finite"] = w.finite;
  r.doc["dim"] = w.finite ? json(w.total()) : json(nullptr);
  r.doc["counts"] = w.counts;
  if (w.finite) {
    r.text << w.total() << '\n';
    return;
  }
  r.text << "INFINITE\n";
  for (std::size_t d = 0; d < w.counts.size(); ++d) r.text << "degree " << d << ": " << w.counts[d] << '\n';
}

void cmd_growth(const RunConfig& cfg, Report& r) {
  Alphabet a = Alphabet::generic(0);
  AvoidanceGraph g;
  NormalWordReport w = growth_report(cfg, a, &g, r);
  if (r.code != kPass) return;
  std::size_t edges = 0;
  for (const auto& e : g.edges) edges += e.size();
  const bool cycle = g.has_cycle();
  r.doc["finite"] = w.finite;
  r.doc["graph"] = {{"vertices", g.vertices.size()}, {"edges", edges}, {"cycle", cycle}};
  r.doc["counts"] = w.counts;
  r.text << "finite: " << (w.finite ? "yes" : "no") << '\n';
  r.text << "avoidance graph: " << g.vertices.size() << " vertices, " << edges << " edges, cycle: "
         << (cycle ? "yes" : "no") << '\n';
  for (std::size_t d = 0; d < w.counts.size(); ++d) r.text << "degree " << d << ": " << w.counts[d] << '\n';
  if (w.finite) {
    r.doc["total"] = w.total();
    r.text << "total: " << w.total() << '\n';
  }
}

void cmd_basis(const RunConfig& cfg, Report& r) {
  EnvelopeAlgebra a = envelope(cfg);
  json words = json::array();
  for (const auto& w : a.basis()) {
    words.push_back(render_word(w, a.alphabet()));
    r.text << render_word(w, a.alphabet()) << '\n';
  }
  r.doc["dim"] = a.dim();
  r.doc["basis"] = words;
}

void cmd_mul(const RunConfig& cfg, Report& r) {
  EnvelopeAlgebra a = envelope(cfg);
  NcPoly x, y;
  try {
    x = parse_poly(cfg.left, a.alphabet());
    y = parse_poly(cfg.right, a.alphabet());
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  NcPoly product = a.to_poly(a.multiply(a.from_poly(x), a.from_poly(y)));
  r.doc["left"] = render(x, a.alphabet());
  r.doc["right"] = render(y, a.alphabet());
  r.doc["product"] = render(product, a.alphabet());
  r.text << render(product, a.alphabet()) << '\n';
}

void cmd_table(const RunConfig& cfg, Report& r) {
  EnvelopeAlgebra a = envelope(cfg);
  a.fill_table();
  const auto& al = a.alphabet();
  json basis = json::array(), entries = json::array();
  for (const auto& w : a.basis()) basis.push_back(render_word(w, al));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json row = json::array();
      for (const auto& [k, c] : a.entry(i, j)) row.push_back(json::array({k, c.str()}));
      entries.push_back(json::array({i, j, row}));
      r.text << render_word(a.basis()[i], al) << " * " << render_word(a.basis()[j], al) << " = "
             << render(a.to_poly(a.entry_element(i, j)), al) << '\n';
    }
  r.doc["n"] = a.n();
  r.doc["dim"] = a.dim();
  r.doc["basis"] = basis;
  r.doc["entries"] = entries;
}

void cmd_oracle_diff(const RunConfig& cfg, Report& r) {
  const int n = require_matrix(cfg);
  EnvelopeAlgebra a = envelope(cfg);
  a.fill_table();
  const auto& al = a.alphabet();
  json mismatches = json::array();
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      NcPoly engine = a.to_poly(a.entry_element(i, j));
      std::string oracle;
      bool same = false;
      try {
        NcPoly o = oracle_product(n, a.basis()[i], a.basis()[j]);
        same = o == engine;
        oracle = render(o, al);
      } catch (const UncoveredCase& e) {
        oracle = std::string("uncovered: ") + e.what();
      }
      if (same) continue;
      ++count;
      std::string u = render_word(a.basis()[i], al), v = render_word(a.basis()[j], al);
      mismatches.push_back({{"left", u}, {"right", v}, {"engine", render(engine, al)}, {"oracle", oracle}});
      r.text << "mismatch: " << u << " * " << v << "\n  engine: " << render(engine, al) << "\n  oracle: " << oracle
             << '\n';
    }
  r.doc["n"] = n;
  r.doc["pairs_checked"] = a.dim() * a.dim();
  r.doc["mismatch_count"] = count;
  r.doc["mismatches"] = mismatches;
  r.text << "pairs checked: " << a.dim() * a.dim() << '\n' << "mismatches: " << count << '\n';
  if (count != 0) r.code = kVerificationFailure;
}

void cmd_center(const RunConfig& cfg, Report& r) {
  EnvelopeAlgebra a = envelope(cfg);
  std::vector<AlgElement> basis = center_basis(a);
  json polys = json::array();
  r.text << "dimension: " << basis.size() << '\n';
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::string p = render(a.to_poly(basis[k]), a.alphabet());
    polys.push_back(p);
    r.text << "c" << k + 1 << " = " << p << '\n';
  }
  r.doc["dim"] = basis.size();
  r.doc["basis"] = polys;
  if (cfg.matrix_n == 0) return;

  std::vector<ScalarVec> computed, closed;
  bool central = true;
  for (const auto& x : basis) computed.push_back(x.coords());
  for (const auto& p : closed_form_center(a.n())) {
    AlgElement z = a.from_poly(p);
    central = central && is_central(a, z);
    closed.push_back(z.coords());
  }
  const bool span = same_span(computed, closed, a.dim());
  r.doc["checks"] = {{"closed_form_central", central}, {"same_span", span}};
  r.text << "closed-form elements central: " << pass_fail(central) << '\n';
  r.text << "closed-form elements span the center: " << pass_fail(span) << '\n';
  if (!central || !span) r.code = kVerificationFailure;
}

void cmd_decompose(const RunConfig& cfg, Report& r) {
  const int n = require_matrix(cfg);
  EnvelopeAlgebra a = envelope(cfg);
  DecompositionReport d = decompose(a);
  auto families = matrix_units(a);
  auto idem = block_idempotents(a, families);
  std::size_t total = 0;
  for (int b : d.blocks) total += static_cast<std::size_t>(b * b);
  const bool dims = total == a.dim();

  const char* names[] = {"A", "B0", "B1", "D0", "D1"};
  json idem_json = json::object();
  r.text << "blocks: [";
  for (std::size_t k = 0; k < d.blocks.size(); ++k) r.text << (k ? ", " : "") << d.blocks[k];
  r.text << "]\n";
  r.text << "dimension: " << a.dim() << " = 1 + 4*" << n << "^2: " << pass_fail(dims) << '\n';
  r.text << "idempotents:\n";
  for (std::size_t k = 0; k < idem.size(); ++k) {
    std::string p = render(a.to_poly(idem[k]), a.alphabet());
    idem_json[names[k]] = p;
    r.text << "  " << names[k] << ": " << p << '\n';
  }
  r.text << "checks:\n";
  r.text << "  unit relations: " << pass_fail(d.units.ok()) << " (" << d.units.products_checked << " products)\n";
  if (d.units.failure) {
    const auto& f = *d.units.failure;
    r.text << "    first failure: " << family_name(f.left_family) << "[" << f.i << "," << f.j << "] * "
           << family_name(f.right_family) << "[" << f.t << "," << f.l << "]\n";
  }
  r.text << "  resolution of identity: " << pass_fail(d.identity.defect.is_zero()) << '\n';
  r.text << "  generator reconstruction: " << pass_fail(d.identity.failed_generators.empty()) << '\n';
  r.text << "  unit rank: " << d.unit_rank << "/" << a.dim() << ' ' << pass_fail(d.full_rank) << '\n';
  r.text << "  idempotents orthogonal: " << pass_fail(d.idempotents_orthogonal) << '\n';
  r.text << "  idempotents central: " << pass_fail(d.idempotents_central) << '\n';

  r.doc["n"] = n;
  r.doc["dim"] = a.dim();
  r.doc["blocks"] = d.blocks;
  r.doc["idempotents"] = idem_json;
  r.doc["checks"] = {{"unit_relations", d.units.ok()},
                     {"products_checked", d.units.products_checked},
                     {"resolution_of_identity", d.identity.defect.is_zero()},
                     {"generator_reconstruction", d.identity.failed_generators.empty()},
                     {"unit_rank", d.unit_rank},
                     {"full_rank", d.full_rank},
                     {"idempotents_orthogonal", d.idempotents_orthogonal},
                     {"idempotents_central", d.idempotents_central},
                     {"dimension_count", dims}};
  if (!d.ok() || !dims) r.code = kVerificationFailure;
}

void cmd_reps(const RunConfig& cfg, Report& r) {
  const int n = require_matrix(cfg);
  TripleSystem t = matrix_ajts(n);
  Alphabet al = t.alphabet();
  EnvelopeRelations rel = relations(cfg, t);
  std::size_t bound = degree_bound(cfg);
  if (bound == 0) bound = default_max_degree(rel.generators);
  CompletionResult gb = complete(rel.generators, bound, progress);
  if (!gb.ok()) {
    r.code = kResourceBound;
    std::cerr << "ncgb: degree bound " << bound << " exceeded\n";
    return;
  }
  const auto gb_elements = gb.system.elements();

  std::vector<Representation> reps;
  json reps_json = json::array();
  bool ok = true;
  for (int k = 1; k <= 4; ++k) {
    reps.push_back(standard_representation(n, k));
    RepresentationReport rep = check_representation(t, reps.back());
    const bool factors = nonvanishing(gb_elements, al, reps.back()).empty();
    ok = ok && rep.ok() && factors;
    json entry = {{"name", reps.back().name},
                  {"homomorphism", rep.ok()},
                  {"triples_checked", rep.triples_checked},
                  {"envelope_relations_vanish", factors}};
    r.text << reps.back().name << ": homomorphism " << pass_fail(rep.ok()) << " (" << rep.triples_checked
           << " triples), envelope relations vanish " << pass_fail(factors) << '\n';
    if (rep.failure) {
      const auto& f = *rep.failure;
      json tuple = json::array({f.a + 1, f.b + 1, f.c + 1});
      entry["failure"] = tuple;
      r.text << "  first failure at " << tuple_str({f.a, f.b, f.c}) << '\n';
    }
    reps_json.push_back(entry);
  }
  json pairs = json::array();
  std::size_t inequivalent = 0;
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = x + 1; y < reps.size(); ++y) {
      auto w = check_inequivalence(reps[x], reps[y]);
      json entry = {{"left", reps[x].name}, {"right", reps[y].name}, {"inequivalent", w.has_value()}};
      r.text << reps[x].name << " vs " << reps[y].name << ": ";
      if (w) {
        ++inequivalent;
        std::string witness = al.name(static_cast<Symbol>(w->basis_index));
        entry["witness"] = witness;
        entry["traces"] = json::array({w->left.str(), w->right.str()});
        r.text << "inequivalent, trace at " << witness << ": " << w->left.str() << " vs " << w->right.str() << '\n';
      } else {
        ok = false;
        r.text << "no trace witness\n";
      }
      pairs.push_back(entry);
    }
  r.text << "representations passing: " << std::count_if(reps_json.begin(), reps_json.end(), [](const json& e) {
    return e["homomorphism"].get<bool>() && e["envelope_relations_vanish"].get<bool>();
  }) << "/4, inequivalent pairs: " << inequivalent << "/6\n";
  r.doc["n"] = n;
  r.doc["representations"] = reps_json;
  r.doc["pairs"] = pairs;
  if (!ok) r.code = kVerificationFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--matrix-n", cfg.matrix_n, "Use the n x n matrix triple system");
  sub->add_option("--input", cfg.input, "Triple-system JSON file");
  sub->add_option("--mode", cfg.mode, "Envelope relation set")->check(CLI::IsMember({"full", "paper"}));
  sub->add_option("--max-degree", cfg.max_degree, "Completion degree bound (overrides NCGB_MAX_DEGREE)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "Worker thread cap")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Groebner bases and triple-system envelopes"};
  app.require_subcommand(1);
  RunConfig cfg;

  using Handler = void (*)(const RunConfig&, Report&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"check", "Check the triple-system axioms", cmd_check},
      {"gb", "Complete the envelope relations to a reduced Groebner basis", cmd_gb},
      {"dim", "Dimension of the envelope, or INFINITE with growth counts", cmd_dim},
      {"basis", "Normal-word basis of the envelope", cmd_basis},
      {"mul", "Multiply two polynomials in the envelope", cmd_mul},
      {"table", "Full multiplication table", cmd_table},
      {"oracle-diff", "Compare the table with the closed-form structure constants", cmd_oracle_diff},
      {"center", "Basis of the center", cmd_center},
      {"decompose", "Check the matrix-unit decomposition", cmd_decompose},
      {"reps", "Check the four degree-n representations", cmd_reps},
      {"growth", "Normal-word counts per degree and the avoidance graph", cmd_growth},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (name == "mul") {
      sub->add_option("left", cfg.left, "Left factor")->required();
      sub->add_option("right", cfg.right, "Right factor")->required();
    }
    handlers[sub] = fn;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.jobs > 0) set_jobs(cfg.jobs);

  Report report;
  try {
    handlers.at(chosen)(cfg, report);
  } catch (const InputError& e) {
    std::cerr << "ncgb: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "ncgb: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegreeBoundExceeded& e) {
    std::cerr << "ncgb: " << e.what() << '\n';
    return kResourceBound;
  } catch (const InfiniteQuotient& e) {
    std::cerr << "ncgb: input error: " << cfg.command << " needs a finite-dimensional envelope\n";
    return kInputError;
  } catch (const VerificationFailure& e) {
    std::cerr << "ncgb: " << e.what() << '\n';
    return kVerificationFailure;
  }

  std::string out;
  if (cfg.format == "json") {
    json doc = {{"command", cfg.command}};
    for (auto& [k, v] : report.doc.items()) doc[k] = v;
    doc["exit_code"] = report.code;
    out = doc.dump(2) + "\n";
  } else {
    out = report.text.str();
  }
  if (cfg.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "ncgb: input error: cannot write " << cfg.output << '\n';
      return kInputError;
    }
    f << out;
  }
  return report.code;
}
