#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

Element E(const Algebra& a, const BasisVector& b, const Scalar& c = Scalar(1L)) { return a.element(b, c); }

AutParams unit_params(const IndexGroup& g, const char* c, const char* r, int sign) {
  return AutParams{Character::trivial(g), S(c), S(r), sign};
}

/// Validated parameter sets on Gamma = Z + sqrt(2) Z, s = 1/2.
std::vector<AutParams> random_params(const IndexGroup& g, std::mt19937_64& rng, int n) {
  const std::vector<std::pair<const char*, const char*>> units{
      {"1", "1"}, {"3 + 2*sqrt(2)", "1 + sqrt(2)"}, {"3 - 2*sqrt(2)", "-1 + sqrt(2)"}, {"17 + 12*sqrt(2)", "3 + 2*sqrt(2)"}};
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<AutParams> out;
  for (int k = 0; k < n; ++k) {
    auto [c, r] = units[pick(rng)];
    AutParams p{Character{{random_nonzero(rng), random_nonzero(rng)}}, S(c), S(r), coin(rng) ? 1 : -1};
    if (coin(rng)) p.r = -*p.r;
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("validation examples") {
  Algebra sv(group_z2("1/2"), Variant::SV);
  CHECK(aut_validate(sv, AutParams::parity_involution(sv.group())).ok());
  Algebra s0(make_group({"1", "sqrt(2)"}, "0"), Variant::SV);
  CHECK(aut_validate(s0, unit_params(s0.group(), "3 + 2*sqrt(2)", "1 + sqrt(2)", 1)).ok());
  Algebra z(group_z("0"), Variant::SV);
  AutValidation bad = aut_validate(z, unit_params(z.group(), "2", "sqrt(2)", 1));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.errors[0].find("scaling does not preserve lattice") != std::string::npos);

  AutParams p = AutParams::identity(sv.group());
  p.r = S("-1");
  CHECK(aut_validate(sv, p).ok());
  p.r = S("2");
  CHECK_FALSE(aut_validate(sv, p).ok());
  p = AutParams::identity(sv.group());
  p.r.reset();
  CHECK_FALSE(aut_validate(sv, p).ok());
  CHECK(aut_validate(Algebra(sv.group(), Variant::W), p).ok());
  p = AutParams::identity(sv.group());
  p.sign = 2;
  CHECK_FALSE(aut_validate(sv, p).ok());
  p = AutParams::identity(sv.group());
  p.tau.values[1] = Scalar();
  CHECK_FALSE(aut_validate(sv, p).ok());
  p = AutParams::identity(sv.group());
  p.c = Scalar();
  CHECK_FALSE(aut_validate(sv, p).ok());
  // Several problems are reported separately.
  AutParams many{Character{{Scalar(), S("1")}}, S("1 + sqrt(2)"), S("1"), 3};
  CHECK(aut_validate(sv, many).errors.size() == 4);
}

TEST_CASE("application examples") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  AutParams inv = AutParams::parity_involution(g);
  CHECK(aut_apply(sv, inv, E(sv, sv.L(S("1 - sqrt(2)"), 2))) == E(sv, sv.L(S("1 - sqrt(2)"), 2)));
  CHECK(aut_apply(sv, inv, E(sv, sv.G(S("1/2"), 1))) == E(sv, sv.G(S("1/2"), 1), S("-1")));

  AutParams u = unit_params(g, "3 + 2*sqrt(2)", "1 + sqrt(2)", 1);
  CHECK(aut_apply(sv, u, E(sv, sv.L(S("1"), 0))) == E(sv, sv.L(S("3 + 2*sqrt(2)"), 0), S("3 - 2*sqrt(2)")));
  IndexGroup g0 = make_group({"1", "sqrt(2)"}, "0");
  Algebra sv0(g0, Variant::SV);
  AutParams u0 = unit_params(g0, "3 + 2*sqrt(2)", "1 + sqrt(2)", 1);
  CHECK(aut_apply(sv0, u0, E(sv0, sv0.G(S("0"), 0))) == E(sv0, sv0.G(S("0"), 0), S("-1 + sqrt(2)")));
  // c^i r^{-1} at level 2
  CHECK(aut_apply(sv, u, E(sv, sv.G(S("1/2"), 2))) ==
        E(sv, sv.G(S("3/2 + sqrt(2)"), 2), S("3 + 2*sqrt(2)").pow(2) * S("1 + sqrt(2)").inverse()));
  // preserves parity, maps degree a to c a
  for (const auto& b : sv.window_basis(Window::box(g, 1, 2))) {
    Element img = aut_apply(sv, u, b);
    REQUIRE(img.size() == 1);
    const BasisVector& t = img.terms().begin()->first;
    CHECK(parity(t) == parity(b));
    CHECK(g.value(t.degree) == u.c * g.value(b.degree));
    CHECK(t.level == b.level);
  }
}

TEST_CASE("homomorphism checks") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  Window w = Window::box(g, 1, 2);
  CHECK(aut_check_hom(sv, AutParams::identity(g), w).passed());
  CHECK(aut_check_hom(sv, AutParams::parity_involution(g), w).passed());
  CHECK(aut_check_hom(sv, unit_params(g, "3 + 2*sqrt(2)", "1 + sqrt(2)", -1), w).passed());

  AutParams tampered = AutParams::identity(g);
  tampered.sign = 2;
  HomReport r = aut_check_hom(sv, tampered, w);
  REQUIRE_FALSE(r.passed());
  for (const auto& v : r.violations) {
    CHECK(v.x.kind == Kind::G);
    CHECK(v.y.kind == Kind::G);
  }

  // r with r^2 != c is caught by the bracket of two odd vectors as well.
  AutParams wrong_root = unit_params(g, "3 + 2*sqrt(2)", "1", 1);
  CHECK_FALSE(aut_check_hom(sv, wrong_root, w).passed());

  std::mt19937_64 rng(42);
  for (const auto& p : random_params(g, rng, 6)) {
    REQUIRE(aut_validate(sv, p).ok());
    CHECK(aut_check_hom(sv, p, w).passed());
  }
  Algebra wa(g, Variant::W);
  AutParams wp{Character{{S("5"), S("-1/3")}}, S("3 - 2*sqrt(2)"), std::nullopt, 1};
  CHECK(aut_validate(wa, wp).ok());
  CHECK(aut_check_hom(wa, wp, Window::box(g, 2, 2)).passed());
}

TEST_CASE("composition examples") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  AutParams id = AutParams::identity(g);
  CHECK(aut_compose(sv, id, id) == id);
  AutParams p1 = unit_params(g, "3 + 2*sqrt(2)", "1 + sqrt(2)", 1);
  AutParams p2 = unit_params(g, "3 - 2*sqrt(2)", "-1 + sqrt(2)", -1);
  CHECK(aut_compose(sv, p1, p2) == AutParams::parity_involution(g));

  IndexGroup z = group_z("0");
  Algebra zs(z, Variant::SV);
  // On Gamma = Z with s = 0 the canonical basis is {1}; use (1/2)Z for the
  // quoted tau(1/2) example.
  IndexGroup h = make_group({"1", "1/2"}, "0");
  Algebra hs(h, Variant::SV);
  AutParams t1{Character{{S("2")}}, S("1"), S("1"), 1};
  AutParams t2{Character{{S("3")}}, S("1"), S("1"), 1};
  CHECK(aut_compose(hs, t1, t2).tau(deg(h, "1/2")) == S("6"));
  CHECK(aut_compose(zs, AutParams::identity(z), AutParams::identity(z)) == AutParams::identity(z));
}

TEST_CASE("composition coherence, associativity, inverses and the sign factor") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  const auto basis = sv.window_basis(Window::box(g, 1, 2));
  std::mt19937_64 rng(2024);
  auto params = random_params(g, rng, 8);
  params.push_back(AutParams::identity(g));
  params.push_back(AutParams::parity_involution(g));
  for (const auto& p1 : params) {
    for (const auto& p2 : params) {
      AutParams c = aut_compose(sv, p1, p2);
      CHECK(aut_validate(sv, c).ok());
      CHECK(c.sign == p1.sign * p2.sign);
      for (const auto& b : basis) CHECK(aut_apply(sv, c, b) == aut_apply(sv, p1, aut_apply(sv, p2, b)));
    }
  }
  for (std::size_t i = 0; i < params.size(); i += 2) {
    for (std::size_t j = 1; j < params.size(); j += 3) {
      for (std::size_t k = 0; k < params.size(); k += 3) {
        CHECK(aut_compose(sv, aut_compose(sv, params[i], params[j]), params[k]) ==
              aut_compose(sv, params[i], aut_compose(sv, params[j], params[k])));
      }
    }
  }
  for (const auto& p : params) {
    AutParams q = aut_inverse(sv, p);
    CHECK(aut_validate(sv, q).ok());
    AutParams e = AutParams::identity(g);
    AutParams pq = aut_compose(sv, p, q), qp = aut_compose(sv, q, p);
    CHECK(pq.tau.values == e.tau.values);
    CHECK(pq.c == e.c);
    CHECK(pq.r == e.r);
    CHECK(qp.c == e.c);
    CHECK(pq.sign == 1);
    for (const auto& b : basis) CHECK(aut_apply(sv, qp, b) == sv.element(b));
    CHECK(aut_compose(sv, p, AutParams::identity(g)) == p);
    CHECK(aut_compose(sv, AutParams::identity(g), p) == p);
  }
}
