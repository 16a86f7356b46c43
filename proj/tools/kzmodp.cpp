#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kzmodp/annihilator.hpp"
#include "kzmodp/derham.hpp"
#include "kzmodp/kz_system.hpp"
#include "kzmodp/serialize.hpp"
#include "kzmodp/sweep.hpp"
#include "kzmodp/verma.hpp"
#include "kzmodp/wronskian.hpp"

namespace {

using namespace kzmodp;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

// Largest n for which symbolic computation is offered.
constexpr std::uint64_t kSymbolicMaxN = 7;
// Beyond this M the 2^{M-1} compositions of the closed form are skipped.
constexpr std::uint32_t kClosedFormMaxM = 20;

struct RunConfig {
  std::string command;
  std::uint64_t p = 0, q = 0, n = 0;
  std::vector<long long> z;
  std::optional<std::uint32_t> l;
  std::optional<int> i;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  bool symbolic = false;
  std::string format = "json";
  std::string out;

  std::string input;
  bool zero = false;
  std::string triples;
  std::string g, h;
  std::string L, K;
  std::uint64_t l_max = 0, m_max = 0;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  int code = kOk;
};

Output json_output(const json& j, int code = kOk) { return {j.dump(2) + "\n", code}; }

KzParams params_of(const RunConfig& cfg) { return KzParams::derive(cfg.p, cfg.q, cfg.n); }

void require_format(const RunConfig& cfg, bool tsv_supported) {
  if (cfg.format == "tsv" && !tsv_supported) throw InvalidInput(cfg.command + " has no tsv output; use --format json");
}

void gate_symbolic(const KzParams& params) {
  if (params.n > kSymbolicMaxN) {
    throw InvalidInput("symbolic mode is limited to n <= " + std::to_string(kSymbolicMaxN));
  }
  std::cerr << "note: symbolic mode multiplies polynomials of degree up to " << params.degree()
            << " in " << params.n << " variables; expect it to be slower than a specialization\n";
}

Context<PrimeField> given_point(const KzParams& params, const RunConfig& cfg) {
  if (cfg.z.size() != params.n) {
    throw InvalidInput("--z needs exactly n = " + std::to_string(params.n) + " coordinates");
  }
  return make_specialized(PrimeField(params.p), cfg.z);
}

// The seeded point of trial 0 in the field used for random specializations.
template <class Fn>
auto with_seeded_point(const KzParams& params, std::uint64_t seed, Fn&& fn) {
  return with_specialization_field(params, [&](const auto& field) {
    Rng rng = trial_rng(seed, 0);
    return fn(make_specialized(field, random_distinct_point(field, static_cast<int>(params.n), rng)));
  });
}

template <Field F>
json context_json(const Context<F>& ctx) {
  return json{{"field", field_header(ctx.field)}, {"z", to_json(ctx.z)}};
}

Output cmd_params(const RunConfig& cfg) {
  require_format(cfg, true);
  const auto params = params_of(cfg);
  if (cfg.format == "tsv") {
    std::ostringstream out;
    out << "p\tq\tn\tk\ta\tM\tak\n"
        << params.p << '\t' << params.q << '\t' << params.n << '\t' << params.k << '\t' << params.a << '\t'
        << params.M << '\t' << params.ak() << '\n';
    return {out.str()};
  }
  return json_output(to_json(params));
}

template <Field F>
std::vector<SolutionVector<F>> selected_solutions(const KzParams& params, const Context<F>& ctx,
                                                  const RunConfig& cfg) {
  auto sols = arithmetic_solutions(params, ctx);
  if (!cfg.l) return sols;
  if (*cfg.l < 1 || *cfg.l > params.ak()) {
    throw InvalidInput("--l must be in 1.." + std::to_string(params.ak()));
  }
  return {sols[*cfg.l - 1]};
}

template <Field F>
Output solve_report(const KzParams& params, const Context<F>& ctx, const RunConfig& cfg) {
  const auto sols = selected_solutions(params, ctx, cfg);
  if (cfg.format == "tsv") {
    std::ostringstream out;
    out << "l";
    for (std::uint32_t j = 1; j <= params.n; ++j) out << "\tP" << j;
    out << '\n';
    for (const auto& s : sols) {
      out << s.l;
      for (const auto& c : s.components) out << '\t' << to_json(c).dump();
      out << '\n';
    }
    return {out.str()};
  }
  json list = json::array();
  for (const auto& s : sols) list.push_back(json{{"l", s.l}, {"components", to_json(s.components)}});
  json out{{"params", to_json(params)}, {"context", ctx.symbolic ? "symbolic" : "specialized"}};
  out.update(context_json(ctx));
  if (ctx.symbolic) out.erase("z");
  out["solutions"] = list;
  return json_output(out);
}

Output cmd_solve(const RunConfig& cfg) {
  require_format(cfg, true);
  const auto params = params_of(cfg);
  if (cfg.symbolic) {
    gate_symbolic(params);
    const auto ctx = make_symbolic(params.p, params.n);
    // Components are polynomials; print them as such.
    auto sols = selected_solutions(params, ctx, cfg);
    json list = json::array();
    for (const auto& s : sols) {
      json comps = json::array();
      for (const auto& c : s.components) comps.push_back(to_json(*c.as_polynomial()));
      list.push_back(json{{"l", s.l}, {"components", comps}});
    }
    if (cfg.format == "tsv") throw InvalidInput("symbolic solve has no tsv output");
    return json_output(json{{"params", to_json(params)},
                            {"context", "symbolic"},
                            {"field", field_header(ctx.field)},
                            {"solutions", list}});
  }
  if (!cfg.z.empty()) return solve_report(params, given_point(params, cfg), cfg);
  return with_seeded_point(params, cfg.seed, [&](const auto& ctx) { return solve_report(params, ctx, cfg); });
}

// {"p": int, "vector": [multivariate polynomial, ...]} with n = vector length.
std::vector<SymbolicPoly> read_vector(const std::string& path, const KzParams& params) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vector") || !doc["vector"].is_array()) {
    throw InvalidInput(path + ": expected {\"vector\": [poly, ...]}");
  }
  if (doc.contains("p") && doc["p"].get<std::uint64_t>() != params.p) throw InvalidInput(path + ": p mismatch");
  if (doc["vector"].size() != params.n) throw InvalidInput(path + ": vector must have n entries");
  const PrimeField field(params.p);
  std::vector<SymbolicPoly> v;
  for (const auto& c : doc["vector"]) v.push_back(multipoly_from_json(field, static_cast<int>(params.n), c));
  return v;
}

Output cmd_verify(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto params = params_of(cfg);
  if (params.n > kSymbolicMaxN) {
    throw InvalidInput("verification is symbolic and limited to n <= " + std::to_string(kSymbolicMaxN));
  }
  const PrimeField field(params.p);
  const int n = static_cast<int>(params.n);
  json reports = json::array();
  bool all_ok = true;
  auto record = [&](const json& label, const std::vector<SymbolicPoly>& v) {
    const auto r = verify_solution(params, v);
    all_ok = all_ok && r.all_flat() && r.sum_zero;
    json j = to_json(r);
    j.update(label);
    reports.push_back(j);
  };
  if (cfg.zero) {
    record(json{{"input", "zero"}}, std::vector<SymbolicPoly>(params.n, SymbolicPoly(field, n)));
    return json_output(json{{"params", to_json(params)}, {"reports", reports}});
  }
  if (!cfg.input.empty()) {
    record(json{{"input", cfg.input}}, read_vector(cfg.input, params));
    return json_output(json{{"params", to_json(params)}, {"reports", reports}});
  }
  const auto sols = symbolic_solutions(params);
  for (std::uint32_t l = 1; l <= params.ak(); ++l) {
    if (cfg.l && *cfg.l != l) continue;
    record(json{{"l", l}}, sols[l - 1]);
  }
  if (cfg.l && (*cfg.l < 1 || *cfg.l > params.ak())) throw InvalidInput("--l must be in 1.." + std::to_string(params.ak()));
  // Arithmetic solutions must be flat; anything else is a discrepancy.
  return json_output(json{{"params", to_json(params)}, {"reports", reports}}, all_ok ? kOk : kViolation);
}

template <Field F>
json ann_at(const KzParams& params, const Context<F>& ctx) {
  const auto r = annihilator_basis(params, ctx);
  json j = to_json(r);
  j.update(context_json(ctx));
  j["solution_rank"] = r.solution_rank;
  // A drop in rank at a special point enlarges the kernel; flagged only.
  j["degenerate"] = r.dim != r.expected;
  return j;
}

Output cmd_ann(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto params = params_of(cfg);
  if (!cfg.z.empty()) return json_output(ann_at(params, given_point(params, cfg)));
  json j = with_seeded_point(params, cfg.seed, [&](const auto& ctx) { return ann_at(params, ctx); });
  const auto trials = annihilator_trials(params, cfg.trials, cfg.seed);
  const bool ok = trials.majority_dim == trials.expected && 2 * trials.span_count > cfg.trials;
  j["trials"] = json{{"dims", trials.dims},
                     {"majority_dim", trials.majority_dim},
                     {"agreeing", trials.agreeing},
                     {"span_count", trials.span_count},
                     {"count", cfg.trials},
                     {"seed", cfg.seed}};
  return json_output(j, ok ? kOk : kViolation);
}

template <Field F>
Output qpoly_report(const KzParams& params, const Context<F>& ctx, const RunConfig& cfg) {
  const DeRham<F> dr(params, ctx);
  const bool closed = params.M <= kClosedFormMaxM;
  if (!closed) std::cerr << "warning: M = " << params.M << " is too large for the closed form; skipped\n";
  if (cfg.i && (*cfg.i < 1 || *cfg.i > static_cast<int>(params.n))) {
    throw InvalidInput("--i must be in 1.." + std::to_string(params.n));
  }
  json list = json::array();
  bool all_match = true;
  for (int i = 1; i <= static_cast<int>(params.n); ++i) {
    if (cfg.i && *cfg.i != i) continue;
    const auto rec = dr.q_poly_recursive(i);
    json j{{"i", i}, {"A_recursive", to_json(rec.A)}};
    if (closed) {
      const auto clo = dr.q_poly_closed(i);
      const bool match = rec.form == clo.form && dr.q_derivative_logform(i) == dr.logarithmic_part(dr.d_twisted(rec.form));
      all_match = all_match && match;
      j["A_closed"] = to_json(clo.A);
      j["match"] = match;
    } else {
      j["A_closed"] = nullptr;
      j["match"] = nullptr;
    }
    j["logform"] = to_json(dr.logarithmic_part(dr.d_twisted(rec.form)));
    j["form"] = to_json(rec.form);
    list.push_back(j);
  }
  json out{{"params", to_json(params)}, {"context", ctx.symbolic ? "symbolic" : "specialized"}};
  out.update(context_json(ctx));
  if (ctx.symbolic) out.erase("z");
  out["q"] = list;
  return json_output(out, all_match ? kOk : kViolation);
}

Output cmd_qpoly(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto params = params_of(cfg);
  if (cfg.symbolic) {
    gate_symbolic(params);
    return qpoly_report(params, make_symbolic(params.p, params.n), cfg);
  }
  if (!cfg.z.empty()) return qpoly_report(params, given_point(params, cfg), cfg);
  return with_seeded_point(params, cfg.seed, [&](const auto& ctx) { return qpoly_report(params, ctx, cfg); });
}

Output cmd_sweep(const RunConfig& cfg) {
  std::vector<Triple> triples;
  if (cfg.triples.empty()) {
    triples = standard_triples();
  } else {
    std::ifstream in(cfg.triples);
    if (!in) throw InvalidInput("cannot read " + cfg.triples);
    triples = parse_triples(in);
  }
  const auto rows = run_sweep(triples, cfg.trials, cfg.seed);
  int code = kOk;
  for (const auto& r : rows) {
    if (r.admissible() && !r.all_ok()) code = kViolation;
  }
  if (cfg.format == "tsv") return {to_tsv(rows), code};
  json list = json::array();
  for (const auto& r : rows) {
    json j{{"p", r.p}, {"q", r.q}, {"n", r.n}};
    if (r.admissible()) {
      j.update(json{{"k", r.k},
                    {"a", r.a},
                    {"M", r.M},
                    {"ak", r.ak},
                    {"rank_ok", r.rank_ok},
                    {"ann_dim_ok", r.ann_dim_ok},
                    {"span_ok", r.span_ok},
                    {"kernel_ok", r.kernel_ok},
                    {"verma_ok", r.verma_ok}});
    } else {
      j["reason"] = r.reason;
    }
    list.push_back(j);
  }
  return json_output(list, code);
}

Output cmd_wronskian(const RunConfig& cfg) {
  require_format(cfg, false);
  if (!is_prime(cfg.p) || cfg.p >= (1ULL << 31)) throw NotPrime("p = " + std::to_string(cfg.p) + " is not prime");
  const PrimeField field(cfg.p);
  const auto g = parse_sparse_poly(field, cfg.g);
  const auto h = parse_sparse_poly(field, cfg.h);
  json out{{"field", field_header(field)}, {"g", to_json(g)}, {"h", to_json(h)}, {"wronskian", to_json(wronskian(g, h))}};
  const auto d = descend(g, h);
  out["descent"] = to_json(d);
  if (!h.is_zero()) {
    const auto f = frobenius_decompose(UniRatFunc<PrimeField>(g, h));
    out["ratio_in_s"] = json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
  }
  return json_output(out);
}

BigInt parse_bigint(const std::string& s, const char* what) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + " must be an integer");
  }
}

Output cmd_verma(const RunConfig& cfg) {
  require_format(cfg, true);
  std::vector<ReducibilityWitness> witnesses;
  json out;
  int code = kOk;
  if (!cfg.L.empty() || !cfg.K.empty()) {
    if (cfg.L.empty() || cfg.K.empty()) throw InvalidInput("--L and --K go together");
    const std::uint64_t lm = cfg.l_max ? cfg.l_max : 50, mm = cfg.m_max ? cfg.m_max : 50;
    witnesses = reducibility(VermaParams{parse_bigint(cfg.L, "--L"), parse_bigint(cfg.K, "--K"), lm, mm});
    json list = json::array();
    for (const auto& w : witnesses) list.push_back(to_json(w));
    out = list;
  } else {
    const auto params = params_of(cfg);
    const auto r = cfg.l_max ? kz_instance_check(params, cfg.l_max) : kz_instance_check(params);
    witnesses = r.second_witnesses;
    out = to_json(r);
    out["params"] = to_json(params);
    if (!r.first_holds) code = kViolation;
  }
  if (cfg.format == "tsv") {
    std::ostringstream s;
    s << "condition\tl\tm\n";
    for (const auto& w : witnesses) s << to_string(w.condition) << '\t' << w.l << '\t' << w.m << '\n';
    return {s.str(), code};
  }
  return json_output(out, code);
}

void add_params(CLI::App* sub, RunConfig& cfg, bool required = true) {
  auto* p = sub->add_option("--p", cfg.p, "prime p");
  auto* q = sub->add_option("--q", cfg.q, "prime q");
  auto* n = sub->add_option("--n", cfg.n, "number of points, n = kq + 1");
  if (required) {
    p->required();
    q->required();
    n->required();
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--out", cfg.out, "write the report to FILE instead of stdout");
}

void add_point(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--z", cfg.z, "specialization point, comma separated")->delimiter(',');
  sub->add_option("--seed", cfg.seed, "seed for random specializations")->envname("KZMODP_SEED");
}

int run(int argc, char** argv) {
  CLI::App app{"Arithmetic solutions of the KZ system mod p"};
  // --h is the Wronskian denominator, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* params = app.add_subcommand("params", "derive (k, a, M) from (p, q, n)");
  add_params(params, cfg);
  add_common(params, cfg);

  auto* solve = app.add_subcommand("solve", "arithmetic solutions P^{lp-1}");
  add_params(solve, cfg);
  add_point(solve, cfg);
  solve->add_option("--l", cfg.l, "only this solution");
  solve->add_flag("--symbolic", cfg.symbolic, "polynomials in z instead of a specialization");
  add_common(solve, cfg);

  auto* verify = app.add_subcommand("verify", "check the KZ equations exactly");
  add_params(verify, cfg);
  verify->add_option("--l", cfg.l, "only this solution");
  verify->add_option("--input", cfg.input, "JSON file {\"vector\": [poly, ...]}")->check(CLI::ExistingFile);
  verify->add_flag("--zero", cfg.zero, "verify the zero vector");
  verify->add_flag("--symbolic", cfg.symbolic, "accepted for uniformity; verification is always symbolic");
  add_common(verify, cfg);

  auto* ann = app.add_subcommand("ann", "annihilator of the solution space");
  add_params(ann, cfg);
  add_point(ann, cfg);
  ann->add_option("--trials", cfg.trials, "random specializations for the majority vote")->check(CLI::PositiveNumber);
  add_common(ann, cfg);

  auto* qpoly = app.add_subcommand("qpoly", "Q_i polynomials, recursive and closed form");
  add_params(qpoly, cfg);
  add_point(qpoly, cfg);
  qpoly->add_option("--i", cfg.i, "only this index");
  qpoly->add_flag("--symbolic", cfg.symbolic, "coefficients in F_p(z)");
  add_common(qpoly, cfg);

  auto* sweep = app.add_subcommand("sweep", "run every check over a list of triples");
  sweep->add_option("--triples", cfg.triples, "file with one 'p q n' per line; default: the standard set");
  sweep->add_option("--trials", cfg.trials, "random specializations per triple")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", cfg.seed, "seed")->envname("KZMODP_SEED");
  sweep->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  sweep->add_option("--out", cfg.out, "write the report to FILE instead of stdout");

  auto* wr = app.add_subcommand("wronskian", "Wronskian descent of g/h over F_p");
  wr->add_option("--p", cfg.p, "prime p")->required();
  wr->add_option("--g", cfg.g, "numerator as exponent:coefficient pairs, e.g. 6:1,1:1")->required();
  wr->add_option("--h", cfg.h, "denominator as exponent:coefficient pairs")->required();
  add_common(wr, cfg);

  auto* verma = app.add_subcommand("verma", "Verma module reducibility conditions");
  add_params(verma, cfg, false);
  verma->add_option("--L", cfg.L, "highest weight");
  verma->add_option("--K", cfg.K, "level");
  verma->add_option("--l-max", cfg.l_max, "scan bound for l (and m with --p --q --n)");
  verma->add_option("--m-max", cfg.m_max, "scan bound for m");
  add_common(verma, cfg);

  bool sweep_format_given = false;
  try {
    app.parse(argc, argv);
    sweep_format_given = sweep->count("--format") > 0;
    cfg.command = app.get_subcommands().front()->get_name();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  Output result;
  try {
    if (*params) {
      result = cmd_params(cfg);
    } else if (*solve) {
      result = cmd_solve(cfg);
    } else if (*verify) {
      result = cmd_verify(cfg);
    } else if (*ann) {
      result = cmd_ann(cfg);
    } else if (*qpoly) {
      result = cmd_qpoly(cfg);
    } else if (*sweep) {
      if (!sweep_format_given) cfg.format = "tsv";
      result = cmd_sweep(cfg);
    } else if (*wr) {
      result = cmd_wronskian(cfg);
    } else if (*verma) {
      if (cfg.L.empty() && cfg.K.empty() && (cfg.p == 0 || cfg.q == 0 || cfg.n == 0)) {
        throw InvalidInput("verma needs --L --K or --p --q --n");
      }
      result = cmd_verma(cfg);
    }
  } catch (const NotAdmissible& e) {
    std::cerr << "NotAdmissible: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::logic_error& e) {
    // A broken internal invariant is a property violation.
    std::cerr << "property violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }

  if (cfg.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(cfg.out);
    if (!(f << result.text)) {
      std::cerr << "error: cannot write " << cfg.out << '\n';
      return kInvalid;
    }
  }
  return result.code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
