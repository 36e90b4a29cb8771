#include "supervir/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "supervir/parallel.hpp"

namespace supervir {

namespace {

struct Session {
  SessionConfig cfg;
  Algebra algebra;
  Window window;
};

Session load_session(const CommandOptions& opts) {
  SessionConfig cfg;
  std::optional<Algebra> algebra;
  std::optional<Window> window;
  with_file_context(opts.config_path, [&](const Json& j) {
    cfg = parse_session_config(j);
    algebra.emplace(build_group(cfg), cfg.variant, cfg.convention);
    if (!opts.window_path && cfg.window) window = parse_window(algebra->group(), *cfg.window);
    return 0;
  });
  if (opts.window_path) {
    window = with_file_context(*opts.window_path, [&](const Json& j) { return parse_window(algebra->group(), j); });
  }
  if (!window) throw ConfigError("no window: give one in the config or with --window");
  if (opts.seed) cfg.seed = *opts.seed;
  return Session{std::move(cfg), std::move(*algebra), std::move(*window)};
}

const std::string& input(const CommandOptions& opts, std::size_t k, const char* what) {
  if (opts.inputs.size() <= k) throw InputError(std::string("missing --input file: ") + what);
  return opts.inputs[k];
}

Json literals(const Algebra& alg, std::initializer_list<BasisVector> args) {
  Json out = Json::array();
  for (const auto& b : args) out.push_back(alg.literal(b));
  return out;
}

Json literals(const Algebra& alg, const std::vector<BasisVector>& args) {
  Json out = Json::array();
  for (const auto& b : args) out.push_back(alg.literal(b));
  return out;
}

void finish(Report& r, const std::string& what) {
  if (!r.violations.empty()) r.status = "fail";
  std::ostringstream s;
  s << r.command << ": " << r.status << " (" << what << ": checked " << r.checked << ", skipped " << r.skipped
    << ", violations " << r.violations.size() << ")";
  r.summary = s.str();
}

// ---------------------------------------------------------------- commands

Report check_axioms(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  const auto basis = alg.window_basis(ses.window);
  const std::size_t n = basis.size();
  Report r;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      Element res = alg.skew_residual(basis[i], basis[j]);
      if (!res.is_zero()) {
        r.violations.push_back(
            Json{{"kind", "skew"}, {"args", literals(alg, {basis[i], basis[j]})}, {"residual", alg.literal(res)}});
      }
    }
  }

  using Triple = std::array<std::size_t, 3>;
  std::vector<Triple> triples;
  if (ses.cfg.triple_samples > 0 && n > 0) {
    std::mt19937_64 rng(ses.cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < ses.cfg.triple_samples; ++k) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }
  const bool sampled = !triples.empty();
  const std::size_t rows = sampled ? triples.size() : n;
  auto parts = parallel_map<Json>(rows, opts.jobs, [&](std::size_t a) {
    Json found = Json::array();
    auto one = [&](std::size_t i, std::size_t j, std::size_t k) {
      Element res = alg.jacobi_residual(basis[i], basis[j], basis[k]);
      if (!res.is_zero()) {
        found.push_back(Json{{"kind", "jacobi"},
                             {"args", literals(alg, {basis[i], basis[j], basis[k]})},
                             {"residual", alg.literal(res)}});
      }
    };
    if (sampled) {
      one(triples[a][0], triples[a][1], triples[a][2]);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) one(a, j, k);
      }
    }
    return found;
  });
  r.checked += sampled ? triples.size() : n * n * n;
  for (auto& p : parts) {
    for (auto& v : p) r.violations.push_back(std::move(v));
  }
  r.details = Json{{"basis_size", n}, {"pairs", n * n}, {"triples", sampled ? triples.size() : n * n * n},
                   {"triple_mode", sampled ? "sampled" : "exhaustive"}, {"seed", ses.cfg.seed}};
  return r;
}

Report check_center(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  Report r;
  if (!opts.inputs.empty()) {
    Element z = with_file_context(opts.inputs[0], [&](const Json& j) {
      return parse_element(alg, j.contains("element") ? j.at("element") : j);
    });
    CentralityReport c = alg.is_central(z, ses.window);
    r.checked = alg.window_basis(ses.window).size();
    r.details = Json{{"element", alg.literal(z)}, {"central", c.central}};
    // A probe that fails to be central is the expected outcome; the report
    // fails only when a nonzero element commutes with the whole window.
    if (c.central && !z.is_zero()) {
      r.violations.push_back(Json{{"kind", "central_element"}, {"element", alg.literal(z)}});
    } else if (!c.central) {
      r.details["witness"] = alg.literal(*c.witness);
      r.details["witness_bracket"] = alg.literal(*c.witness_bracket);
    }
    return r;
  }
  const auto basis = alg.window_basis(ses.window);
  r.checked = basis.size();
  Json center = Json::array();
  for (const auto& z : alg.window_center(ses.window)) {
    center.push_back(alg.literal(z));
    const bool only_c = z.size() == 1 && z.terms().begin()->first.kind == Kind::C;
    if (!only_c) r.violations.push_back(Json{{"kind", "central_element"}, {"element", alg.literal(z)}});
  }
  r.details = Json{{"basis_size", basis.size()}, {"center_dimension", center.size()}, {"center_basis", center}};
  return r;
}

Report check_generators(const Session& ses) {
  const Algebra& alg = ses.algebra;
  SpanReport s = alg.generate_span(ses.window);
  Report r;
  r.checked = alg.window_basis(ses.window).size();
  for (const auto& b : s.missing) r.violations.push_back(Json{{"kind", "missing"}, {"basis", alg.literal(b)}});
  r.details = Json{{"reached", s.reached.size()}, {"missing", s.missing.size()}, {"rounds", s.rounds}};
  return r;
}

Report derivation_check(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  DerivationTable d = with_file_context(input(opts, 0, "derivation table"),
                                        [&](const Json& j) { return parse_derivation_table(alg, j); });
  LeibnizReport l = leibniz_check(alg, d, ses.window, opts.jobs);
  Report r;
  r.checked = l.checked;
  r.skipped = l.skipped;
  for (const auto& v : l.violations) {
    r.violations.push_back(
        Json{{"kind", "leibniz"}, {"args", literals(alg, {v.x, v.y})}, {"residual", alg.literal(v.residual)}});
  }
  r.details = Json{{"parity", d.parity() ? "odd" : "even"}, {"domain_size", d.images().size()}};
  return r;
}

Report derivation_reduce(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  const BasisVector l00 = alg.L(GroupElement(), 0);
  Element v = with_file_context(input(opts, 0, "element or derivation table"), [&](const Json& j) {
    if (j.is_object() && j.contains("images")) {
      DerivationTable d = parse_derivation_table(alg, j);
      if (!d.in_domain(l00)) throw InputError("derivation table has no image for L(0, 0)");
      return d.apply(alg.element(l00));
    }
    return parse_element(alg, j.is_object() && j.contains("element") ? j.at("element") : j);
  });
  Element y = adjust_inner(alg, v);
  Element back = alg.bracket(y, alg.element(l00));
  Report r;
  r.checked = 1;
  if (back != v) {
    r.violations.push_back(Json{{"kind", "postcondition"}, {"expected", alg.literal(v)}, {"got", alg.literal(back)}});
  }
  r.details = Json{{"v", alg.literal(v)}, {"y", alg.literal(y)}, {"y_terms", element_to_json(alg, y)}};
  return r;
}

AutParams load_valid_params(const Algebra& alg, const std::string& path) {
  AutParams p = with_file_context(path, [&](const Json& j) { return parse_aut_params(alg, j); });
  AutValidation v = aut_validate(alg, p);
  if (!v.ok()) {
    std::string msg = path + ": invalid automorphism parameters";
    for (const auto& e : v.errors) msg += "; " + e;
    throw ConfigError(msg);
  }
  return p;
}

Report aut_check(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  AutParams p = load_valid_params(alg, input(opts, 0, "automorphism parameters"));
  HomReport h = aut_check_hom(alg, p, ses.window, opts.jobs);
  Report r;
  r.checked = h.checked;
  for (const auto& v : h.violations) {
    r.violations.push_back(Json{{"kind", "homomorphism"},
                                {"args", literals(alg, {v.x, v.y})},
                                {"image_of_bracket", alg.literal(v.image_of_bracket)},
                                {"bracket_of_images", alg.literal(v.bracket_of_images)}});
  }
  r.details = Json{{"params", aut_params_to_json(alg, p)}};
  return r;
}

Report aut_compose_cmd(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  AutParams p1 = load_valid_params(alg, input(opts, 0, "first automorphism"));
  AutParams p2 = load_valid_params(alg, input(opts, 1, "second automorphism"));
  AutParams p = aut_compose(alg, p1, p2);
  Report r;
  AutValidation v = aut_validate(alg, p);
  for (const auto& e : v.errors) r.violations.push_back(Json{{"kind", "composite_invalid"}, {"reason", e}});
  for (const auto& b : alg.window_basis(ses.window)) {
    ++r.checked;
    Element lhs = aut_apply(alg, p, b);
    Element rhs = aut_apply(alg, p1, aut_apply(alg, p2, b));
    if (lhs != rhs) {
      r.violations.push_back(Json{{"kind", "composition"},
                                  {"args", literals(alg, {b})},
                                  {"composed", alg.literal(lhs)},
                                  {"sequential", alg.literal(rhs)}});
    }
  }
  r.details = Json{{"composed", aut_params_to_json(alg, p)}};
  return r;
}

Window default_table_window(const Window& w) {
  Window t = w.pair_closure();
  t.i_max += 1;
  return t;
}

Report cocycle_check(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  CocycleSpec psi = with_file_context(input(opts, 0, "cocycle"), [&](const Json& j) {
    return parse_cocycle(alg, j, default_table_window(ses.window));
  });
  CocycleReport c = is_cocycle(alg, psi, ses.window, opts.jobs);
  Report r;
  r.checked = c.checked_pairs + c.checked_triples;
  r.skipped = c.skipped;
  for (const auto& v : c.violations) {
    r.violations.push_back(Json{{"kind", v.args.size() == 2 ? "skew" : "cocycle"},
                                {"args", literals(alg, v.args)},
                                {"residual", v.residual.str()}});
  }
  r.details = Json{{"pairs", c.checked_pairs}, {"triples", c.checked_triples}};
  return r;
}

Report cocycle_trivialize(const Session& ses, const CommandOptions& opts) {
  const Algebra& alg = ses.algebra;
  CocycleSpec psi = with_file_context(input(opts, 0, "cocycle"), [&](const Json& j) {
    return parse_cocycle(alg, j, default_table_window(ses.window));
  });
  LinearFunctional f = trivialize(alg, psi, ses.window.pair_closure());
  ResidualReport res = residual_check(alg, psi, f, ses.window);
  Report r;
  Json sectors = Json::object();
  auto sector = [&](const char* name, const ResidualSector& s) {
    r.checked += s.checked;
    sectors[name] = Json{{"checked", s.checked}, {"nonzero", s.nonzero.size()}};
    for (const auto& e : s.nonzero) {
      r.violations.push_back(
          Json{{"kind", std::string("residual_") + name}, {"args", literals(alg, {e.x, e.y})}, {"residual", e.value.str()}});
    }
  };
  sector("LL", res.ll);
  sector("LG", res.lg);
  sector("GG", res.gg);
  Json fj = Json::object();
  for (const auto& b : alg.window_basis(ses.window)) {
    Scalar v = f.value(b);
    if (!v.is_zero()) fj[alg.literal(b)] = v.str();
  }
  r.details = Json{{"sectors", sectors}, {"f", fj}};
  return r;
}

}  // namespace

Json Report::to_json() const {
  return Json{{"command", command}, {"status", status},         {"checked", checked}, {"skipped", skipped},
              {"violations", violations}, {"details", details}, {"summary", summary}};
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-axioms",      "check-center", "check-generators",
                                              "derivation-check",  "derivation-reduce", "aut-check",
                                              "aut-compose",       "cocycle-check",     "cocycle-trivialize"};
  return names;
}

Report execute(const CommandOptions& opts) {
  using Fn = std::function<Report(const Session&, const CommandOptions&)>;
  static const std::map<std::string, std::pair<Fn, const char*>> table{
      {"check-axioms", {check_axioms, "bracket axioms"}},
      {"check-center", {check_center, "center"}},
      {"check-generators", {[](const Session& s, const CommandOptions&) { return check_generators(s); }, "generation"}},
      {"derivation-check", {derivation_check, "Leibniz rule"}},
      {"derivation-reduce", {derivation_reduce, "inner adjustment"}},
      {"aut-check", {aut_check, "homomorphism"}},
      {"aut-compose", {aut_compose_cmd, "composition"}},
      {"cocycle-check", {cocycle_check, "cocycle identity"}},
      {"cocycle-trivialize", {cocycle_trivialize, "trivialization residual"}},
  };
  auto it = table.find(opts.command);
  if (it == table.end()) throw InputError("unknown command \"" + opts.command + "\"");
  Session ses = load_session(opts);
  Report r = it->second.first(ses, opts);
  r.command = opts.command;
  finish(r, it->second.second);
  return r;
}

int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    r = execute(opts);
  } catch (const std::exception& e) {
    r = Report{};
    r.command = opts.command;
    r.status = "error";
    r.details = Json{{"error", e.what()}};
    r.summary = opts.command + ": error: " + e.what();
  }
  if (opts.out) {
    std::ofstream f(*opts.out);
    if (!f) {
      err << opts.command << ": cannot write report to " << *opts.out << "\n";
      return 2;
    }
    f << r.to_json().dump(2) << "\n";
  }
  (r.status == "error" ? err : out) << r.summary << "\n";
  return r.exit_code();
}

}  // namespace supervir
