#include "supervir/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace supervir {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("expected a scalar literal string, got " + j.dump());
}

Scalar literal_scalar(const std::string& text, std::int64_t d) {
  try {
    return parse_scalar(text, d);
  } catch (const Error& e) {
    throw LiteralError(text, e.what());
  }
}

int parse_level(const std::string& text, const std::string& token) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw LiteralError(token, "level must be a nonnegative integer in \"" + token + "\"");
  }
  return std::stoi(t);
}

std::set<GroupElement> parse_degree_list(const IndexGroup& group, const Json& j) {
  std::set<GroupElement> out;
  for (const auto& item : j) out.insert(parse_degree(group, scalar_text(item)));
  return out;
}

}  // namespace

SessionConfig parse_session_config(const Json& j) {
  if (!j.is_object()) throw InputError("session config must be a JSON object");
  SessionConfig cfg;
  if (j.contains("d")) cfg.d = j.at("d").get<std::int64_t>();
  if (cfg.d != 0 && !valid_field_parameter(cfg.d)) {
    throw ConfigError("d = " + std::to_string(cfg.d) + " must be square-free and different from 0 and 1");
  }
  if (!j.contains("gamma_generators")) throw InputError("session config needs gamma_generators");
  for (const auto& g : j.at("gamma_generators")) cfg.gamma_generators.push_back(scalar_text(g));
  if (j.contains("s")) cfg.s = scalar_text(j.at("s"));
  if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant").get<std::string>());
  if (j.contains("convention")) {
    auto c = j.at("convention").get<std::string>();
    if (c == "as_published") {
      cfg.convention = SVirConvention::AsPublished;
    } else if (c == "sign_corrected") {
      cfg.convention = SVirConvention::SignCorrected;
    } else {
      throw LiteralError(c, "unknown convention \"" + c + "\" (expected as_published or sign_corrected)");
    }
  }
  if (j.contains("window")) cfg.window = j.at("window");
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("triple_samples")) cfg.triple_samples = j.at("triple_samples").get<std::size_t>();
  return cfg;
}

IndexGroup build_group(const SessionConfig& cfg) {
  std::vector<Scalar> gens;
  for (const auto& g : cfg.gamma_generators) gens.push_back(literal_scalar(g, cfg.d));
  return IndexGroup::from_generators(gens, literal_scalar(cfg.s, cfg.d));
}

GroupElement parse_degree(const IndexGroup& group, std::string_view text) {
  std::string t(text);
  Scalar x = literal_scalar(t, group.d());
  auto g = group.member(x);
  if (!g) throw LiteralError(t, "degree \"" + t + "\" is not in the index group");
  return *g;
}

Scalar parse_scalar_field(const Algebra& algebra, const Json& j) {
  return literal_scalar(scalar_text(j), algebra.group().d());
}

BasisVector parse_basis(const Algebra& algebra, std::string_view text) {
  const std::string token(text);
  std::string t = trim(text);
  if (t == "C") {
    try {
      return algebra.C();
    } catch (const InputError& e) {
      throw LiteralError(token, e.what());
    }
  }
  if (t.size() < 4 || (t[0] != 'L' && t[0] != 'G') || t.back() != ')') {
    throw LiteralError(token, "bad basis literal \"" + token + "\" (expected L(deg, level), G(deg, level) or C)");
  }
  std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
  if (inner.empty() || inner.front() != '(') throw LiteralError(token, "bad basis literal \"" + token + "\"");
  inner = inner.substr(1);
  int level = 0;
  std::string degree_text = inner;
  if (auto comma = inner.rfind(','); comma != std::string::npos) {
    degree_text = inner.substr(0, comma);
    level = parse_level(inner.substr(comma + 1), token);
  }
  GroupElement deg = parse_degree(algebra.group(), trim(degree_text));
  BasisVector b{t[0] == 'L' ? Kind::L : Kind::G, deg, level};
  try {
    algebra.validate(b);
  } catch (const InputError& e) {
    throw LiteralError(token, std::string(e.what()) + " in \"" + token + "\"");
  }
  return b;
}

Element parse_element(const Algebra& algebra, const Json& j) {
  if (j.is_string()) return algebra.element(parse_basis(algebra, j.get<std::string>()));
  if (!j.is_object() || !j.contains("terms")) throw InputError("element must be a basis literal or {\"terms\": [...]}");
  Element x = algebra.zero();
  for (const auto& term : j.at("terms")) {
    BasisVector b = parse_basis(algebra, term.at("basis").get<std::string>());
    Scalar c = term.contains("coeff") ? parse_scalar_field(algebra, term.at("coeff")) : Scalar(1L);
    x.add_term(b, c);
  }
  return x;
}

Json element_to_json(const Algebra& algebra, const Element& x) {
  Json terms = Json::array();
  for (const auto& [b, c] : x.terms()) terms.push_back(Json{{"basis", algebra.literal(b)}, {"coeff", c.str()}});
  return Json{{"terms", terms}};
}

Window parse_window(const IndexGroup& group, const Json& j) {
  if (!j.is_object()) throw InputError("window must be a JSON object");
  int i_max = j.value("i_max", 0);
  if (j.contains("degrees")) return Window::from_degrees(parse_degree_list(group, j.at("degrees")), i_max);
  if (j.contains("degree_coord_bound")) return Window::box(group, j.at("degree_coord_bound").get<int>(), i_max);
  throw InputError("window needs degree_coord_bound or degrees");
}

DerivationTable parse_derivation_table(const Algebra& algebra, const Json& j) {
  int parity = 0;
  if (j.contains("parity")) {
    auto p = j.at("parity").get<std::string>();
    if (p == "odd") {
      parity = 1;
    } else if (p != "even") {
      throw LiteralError(p, "parity must be \"even\" or \"odd\", got \"" + p + "\"");
    }
  }
  std::optional<GroupElement> degree;
  if (j.contains("degree")) degree = parse_degree(algebra.group(), scalar_text(j.at("degree")));
  std::map<BasisVector, Element> images;
  for (const auto& item : j.at("images")) {
    BasisVector b = parse_basis(algebra, item.at("basis").get<std::string>());
    images.insert_or_assign(b, parse_element(algebra, item.at("image")));
  }
  return DerivationTable(algebra, parity, degree, std::move(images));
}

AutParams parse_aut_params(const Algebra& algebra, const Json& j) {
  const IndexGroup& group = algebra.group();
  AutParams p;
  p.tau = Character::trivial(group);
  if (j.contains("tau")) {
    for (const auto& [key, value] : j.at("tau").items()) {
      Scalar b = literal_scalar(key, group.d());
      auto it = std::find(group.basis().begin(), group.basis().end(), b);
      if (it == group.basis().end()) {
        throw LiteralError(key, "tau key \"" + key + "\" is not a canonical basis element of the index group");
      }
      p.tau.values[static_cast<std::size_t>(it - group.basis().begin())] = parse_scalar_field(algebra, value);
    }
  }
  if (j.contains("c")) p.c = parse_scalar_field(algebra, j.at("c"));
  if (j.contains("r")) p.r = parse_scalar_field(algebra, j.at("r"));
  if (j.contains("sign")) p.sign = j.at("sign").get<int>();
  return p;
}

Json aut_params_to_json(const Algebra& algebra, const AutParams& p) {
  Json tau = Json::object();
  for (std::size_t k = 0; k < p.tau.values.size(); ++k) {
    tau[algebra.group().basis()[k].str()] = p.tau.values[k].str();
  }
  Json out{{"tau", tau}, {"c", p.c.str()}};
  if (p.r) out["r"] = p.r->str();
  out["sign"] = p.sign;
  return out;
}

CocycleSpec parse_cocycle(const Algebra& algebra, const Json& j, const Window& default_table_window) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coboundary") {
    std::map<BasisVector, Scalar> g;
    for (const auto& [key, value] : j.at("g").items()) {
      g[parse_basis(algebra, key)] = parse_scalar_field(algebra, value);
    }
    return CocycleSpec::coboundary(LinearFunctional::finitely_supported(std::move(g)));
  }
  if (kind == "table") {
    Window w = j.contains("window") ? parse_window(algebra.group(), j.at("window")) : default_table_window;
    std::vector<CocycleEntry> entries;
    for (const auto& e : j.at("entries")) {
      entries.push_back({parse_basis(algebra, e.at("x").get<std::string>()),
                         parse_basis(algebra, e.at("y").get<std::string>()), parse_scalar_field(algebra, e.at("value"))});
    }
    return CocycleSpec::table(algebra, w, entries);
  }
  throw LiteralError(kind, "cocycle kind must be \"coboundary\" or \"table\", got \"" + kind + "\"");
}

Json functional_to_json(const Algebra& algebra, const LinearFunctional& f) {
  Json out = Json::object();
  for (const auto& [b, v] : f.values()) {
    if (!v.is_zero()) out[algebra.literal(b)] = v.str();
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(at), '\n'));
    std::size_t end = text.find_first_of(" \t\r\n,:{}[]", at);
    std::string tok = text.substr(at, (end == std::string::npos ? text.size() : end) - at);
    if (tok.empty() && at < text.size()) tok = text.substr(at, 1);
    throw InputError(path + ":" + std::to_string(line) + ": JSON parse error near '" + tok + "'");
  }
}

std::string locate_token(const std::string& path, const std::string& token) {
  std::ifstream in(path);
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (!token.empty() && line.find(token) != std::string::npos) {
      return path + ":" + std::to_string(n) + ": offending token '" + token + "'";
    }
  }
  return path + ": offending token '" + token + "'";
}

}  // namespace supervir
