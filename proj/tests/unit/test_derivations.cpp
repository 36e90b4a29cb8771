#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

Element E(const Algebra& a, const BasisVector& b, const Scalar& c = Scalar(1L)) { return a.element(b, c); }

/// Table D with the given images on the window basis and zero elsewhere.
DerivationTable sparse_table(const Algebra& a, const Window& w, int parity,
                             const std::map<BasisVector, Element>& images) {
  std::map<BasisVector, Element> all;
  for (const auto& b : a.window_basis(w)) {
    auto it = images.find(b);
    all.emplace(b, it == images.end() ? a.zero() : it->second);
  }
  return DerivationTable(a, parity, std::nullopt, std::move(all));
}

}  // namespace

TEST_CASE("d_phi examples") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  CHECK(d_phi(sv, HomZ::identity(g), sv.L(S("2"), 3)) == E(sv, sv.L(S("2"), 3), S("2")));
  CHECK(d_phi(sv, HomZ::zero(g), sv.G(S("1/2"), 1)).is_zero());
  HomZ phi{{S("3"), S("0")}};
  CHECK(d_phi(sv, phi, sv.G(S("3/2 + sqrt(2)"), 1)) == E(sv, sv.G(S("3/2 + sqrt(2)"), 1), S("9")));
}

TEST_CASE("Leibniz check examples") {
  IndexGroup g = group_z("1/2");
  Algebra sv(g, Variant::SV);
  Window w = Window::box(g, 2, 2);

  LeibnizReport id = leibniz_check(sv, d_phi_table(sv, HomZ::identity(g), w.pair_closure()), w);
  CHECK(id.passed());
  CHECK(id.skipped == 0);
  CHECK(id.checked == sv.window_basis(w).size() * sv.window_basis(w).size());

  DerivationTable ad = inner_derivation_table(sv, E(sv, sv.G(S("1/2"), 0)), w.pair_closure());
  CHECK(ad.parity() == 1);
  CHECK(leibniz_check(sv, ad, w).passed());

  const BasisVector l00 = sv.L(S("0"), 0);
  DerivationTable bad = sparse_table(sv, w.pair_closure(), 0, {{l00, E(sv, sv.L(S("1"), 0))}});
  LeibnizReport r = leibniz_check(sv, bad, w);
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.x == l00 && v.y == sv.L(S("0"), 1)) {
      found = true;
      CHECK(v.residual == E(sv, sv.L(S("1"), 1)));
    }
    CHECK_FALSE((v.x == l00 && v.y == sv.L(S("1"), 0)));
  }
  CHECK(found);
}

TEST_CASE("pairs leaving the domain are skipped, not dropped") {
  IndexGroup g = group_z("1/2");
  Algebra sv(g, Variant::SV);
  Window w = Window::box(g, 2, 2);
  LeibnizReport r = leibniz_check(sv, d_phi_table(sv, HomZ::identity(g), w), w);
  const std::size_t n = sv.window_basis(w).size();
  CHECK(r.passed());
  CHECK(r.skipped > 0);
  CHECK(r.checked + r.skipped == n * n);
  Window small = Window::box(g, 1, 1);
  CHECK_THROWS_AS(leibniz_check(sv, d_phi_table(sv, HomZ::identity(g), small), w), InputError);
}

TEST_CASE("D_phi and inner derivations on random data") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  Window w = Window::box(g, 1, 1);
  Window big = w.pair_closure();
  const auto basis = sv.window_basis(w);
  std::mt19937_64 rng(99);
  for (int n = 0; n < 5; ++n) {
    HomZ phi{{random_scalar(rng), random_scalar(rng)}};
    CHECK(leibniz_check(sv, d_phi_table(sv, phi, big), w).passed());
    Element z = random_element(sv, basis, rng, 3);
    for (int p : {0, 1}) {
      Element zp = z.parity_part(p);
      if (zp.is_zero()) continue;
      CHECK(leibniz_check(sv, inner_derivation_table(sv, zp, big), w).passed());
    }
  }
  CHECK_THROWS_AS(inner_derivation_table(sv, E(sv, sv.L(S("0"), 0)) + E(sv, sv.G(S("1/2"), 0)), w), InputError);
}

TEST_CASE("table invariants are enforced") {
  IndexGroup g = group_z("1/2");
  Algebra sv(g, Variant::SV);
  const BasisVector l00 = sv.L(S("0"), 0);
  std::map<BasisVector, Element> odd_image{{l00, E(sv, sv.G(S("1/2"), 0))}};
  CHECK_THROWS_AS(DerivationTable(sv, 0, std::nullopt, odd_image), InputError);
  CHECK_NOTHROW(DerivationTable(sv, 1, std::nullopt, odd_image));
  std::map<BasisVector, Element> shifted{{l00, E(sv, sv.L(S("2"), 0))}};
  CHECK_THROWS_AS(DerivationTable(sv, 0, deg(g, "1"), shifted), InputError);
  CHECK_NOTHROW(DerivationTable(sv, 0, deg(g, "2"), shifted));
}

TEST_CASE("degree components") {
  IndexGroup g = group_z("1/2");
  Algebra sv(g, Variant::SV);
  const BasisVector l00 = sv.L(S("0"), 0);
  DerivationTable d(sv, 0, std::nullopt, {{l00, E(sv, sv.L(S("1"), 0)) + E(sv, sv.L(S("0"), 1))}});
  DerivationTable d1 = degree_component(sv, d, deg(g, "1"));
  CHECK(d1.apply(E(sv, l00)) == E(sv, sv.L(S("1"), 0)));
  CHECK(degree_component(sv, d, deg(g, "5")).apply(E(sv, l00)).is_zero());

  // Reconstruction on a random table.
  Window w = Window::box(g, 2, 2);
  const auto basis = sv.window_basis(w);
  std::mt19937_64 rng(5);
  std::map<BasisVector, Element> images;
  for (const auto& b : basis) {
    Element img = random_element(sv, basis, rng, 3).parity_part(parity(b));
    images.emplace(b, img);
  }
  DerivationTable r(sv, 0, std::nullopt, images);
  std::map<BasisVector, Element> sum;
  for (const auto& b : basis) sum.emplace(b, sv.zero());
  for (const auto& shift : component_shifts(r)) {
    DerivationTable c = degree_component(sv, r, shift);
    for (const auto& b : basis) sum.at(b) += c.apply(E(sv, b));
  }
  for (const auto& b : basis) CHECK(sum.at(b) == images.at(b));
}

TEST_CASE("adjust_inner oracle cases") {
  IndexGroup g = group_z("0");
  Algebra sv(g, Variant::SV);
  const Element l00 = E(sv, sv.L(S("0"), 0));
  struct Case {
    BasisVector v;
    Element y;
  };
  std::vector<Case> cases{
      {sv.L(S("0"), 1), E(sv, sv.L(S("0"), 2), S("-1/2"))},
      {sv.L(S("1"), 0), E(sv, sv.L(S("1"), 0), S("-1"))},
      {sv.G(S("0"), 0), E(sv, sv.G(S("0"), 1), S("-1"))},
  };
  for (const auto& c : cases) {
    Element y = adjust_inner(sv, E(sv, c.v));
    CHECK(y == c.y);
    CHECK(sv.bracket(y, l00) == E(sv, c.v));
  }
}

TEST_CASE("adjust_inner postcondition on random v") {
  IndexGroup g = group_z2("1/2");
  Algebra sv(g, Variant::SV);
  const auto basis = sv.window_basis(Window::box(g, 2, 4));
  const Element l00 = E(sv, sv.L(S("0"), 0));
  std::mt19937_64 rng(1234);
  for (int n = 0; n < 1000; ++n) {
    Element v = random_element(sv, basis, rng, 5);
    CHECK(sv.bracket(adjust_inner(sv, v), l00) == v);
  }
  Algebra w(g, Variant::W);
  const auto wb = w.window_basis(Window::box(g, 1, 3));
  for (int n = 0; n < 100; ++n) {
    Element v = random_element(w, wb, rng, 4);
    CHECK(w.bracket(adjust_inner(w, v), w.element(w.L(S("0"), 0))) == v);
  }
}

TEST_CASE("a degree-shifting map that kills the generators cannot be a derivation") {
  // Contrapositive of the generation argument: set D to zero on every
  // generator and nonzero on one reachable vector; Leibniz must fail.
  IndexGroup g = group_z("1/2");
  Algebra sv(g, Variant::SV);
  Window w = Window::box(g, 2, 2);
  Window big = w.pair_closure();
  const GroupElement gamma = deg(g, "1");
  for (const BasisVector& x : {sv.L(S("1"), 1), sv.L(S("0"), 2), sv.G(S("1/2"), 1), sv.L(S("-1"), 2)}) {
    BasisVector target{x.kind, x.degree + gamma, x.level};
    DerivationTable d = sparse_table(sv, big, 0, {{x, E(sv, target)}});
    CHECK_FALSE(leibniz_check(sv, d, w).passed());
  }
}
