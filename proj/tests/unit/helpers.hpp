#pragma once

#include <random>
#include <string>
#include <vector>

#include "supervir/automorphisms.hpp"
#include "supervir/cohomology.hpp"
#include "supervir/derivations.hpp"
#include "supervir/error.hpp"
#include "supervir/grading.hpp"
#include "supervir/scalar.hpp"
#include "supervir/superalgebra.hpp"

namespace testing {

using namespace supervir;

inline Scalar S(const std::string& lit) { return parse_scalar(lit, 2); }

inline IndexGroup make_group(std::vector<std::string> gens, const std::string& s) {
  std::vector<Scalar> g;
  for (const auto& x : gens) g.push_back(S(x));
  return IndexGroup::from_generators(g, S(s));
}

/// Gamma = Z, given shift.
inline IndexGroup group_z(const std::string& s = "0") { return make_group({"1"}, s); }
/// Gamma = Z + sqrt(2) Z, given shift.
inline IndexGroup group_z2(const std::string& s = "1/2") { return make_group({"1", "sqrt(2)"}, s); }

inline GroupElement deg(const IndexGroup& g, const std::string& lit) {
  auto e = g.member(S(lit));
  if (!e) throw std::runtime_error("test degree " + lit + " not in group");
  return *e;
}

inline Scalar random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return Scalar::rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng, int span = 5) {
  return Scalar(random_rational(rng, span).a(), random_rational(rng, span).a(), 2);
}

inline Scalar random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Scalar x = random_scalar(rng);
    if (!x.is_zero()) return x;
  }
}

/// Random element supported on the given basis with up to `terms` terms.
inline Element random_element(const Algebra& alg, const std::vector<BasisVector>& basis, std::mt19937_64& rng,
                              int terms = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  Element x = alg.zero();
  for (int k = 0; k < terms; ++k) x.add_term(basis[pick(rng)], random_scalar(rng));
  return x;
}

// --------------------------------------------------------------------------
// Independent oracle for the structure constants: the bracket written out
// directly from its defining formulas on field-valued degrees, with no use
// of Algebra or GroupElement.

struct OTerm {
  char kind;  // 'L', 'G', 'C'
  Scalar degree;
  int level;
  Scalar coeff;
};

inline std::vector<OTerm> oracle_bracket(char kx, const Scalar& a, int i, char ky, const Scalar& b, int j,
                                         bool central, bool flip_gg_sign = false) {
  std::vector<OTerm> out;
  auto push = [&](char k, const Scalar& d, int lvl, const Scalar& c) {
    if (lvl >= 0 && !c.is_zero()) out.push_back({k, d, lvl, c});
  };
  const Scalar I(static_cast<long>(i)), J(static_cast<long>(j));
  if (kx == 'L' && ky == 'L') {
    push('L', a + b, i + j, b - a);
    push('L', a + b, i + j - 1, J - I);
    if (central && (a + b).is_zero()) push('C', Scalar(), 0, (a * a * a - a) / Scalar(12L));
  } else if (kx == 'L' && ky == 'G') {
    push('G', a + b, i + j, b - a / Scalar(2L));
    push('G', a + b, i + j - 1, J - I / Scalar(2L));
  } else if (kx == 'G' && ky == 'L') {
    for (auto& t : oracle_bracket('L', b, j, 'G', a, i, central, flip_gg_sign)) {
      t.coeff = -t.coeff;
      out.push_back(t);
    }
  } else if (kx == 'G' && ky == 'G') {
    push('L', a + b, i + j, Scalar(2L));
    if (central && (a + b).is_zero()) {
      Scalar c = (a * a - Scalar::rational(1, 4)) / Scalar(3L);
      push('C', Scalar(), 0, flip_gg_sign ? -c : c);
    }
  }
  return out;
}

/// Converts an oracle result to an Element of the algebra.
inline Element oracle_element(const Algebra& alg, const std::vector<OTerm>& terms) {
  Element x = alg.zero();
  for (const auto& t : terms) {
    BasisVector b = t.kind == 'C' ? alg.C() : t.kind == 'L' ? alg.L(t.degree, t.level) : alg.G(t.degree, t.level);
    x.add_term(b, t.coeff);
  }
  return x;
}

inline char kind_char(Kind k) { return k == Kind::L ? 'L' : k == Kind::G ? 'G' : 'C'; }

}  // namespace testing
