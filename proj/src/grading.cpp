#include "supervir/grading.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "supervir/error.hpp"

namespace supervir {

namespace {

using IntVec = std::array<Integer, 2>;

std::int64_t common_field(std::span<const Scalar> xs) {
  std::int64_t d = 0;
  for (const auto& x : xs) {
    if (x.d() == 0) continue;
    if (d != 0 && d != x.d()) throw ConfigError("generators live in different quadratic fields");
    d = x.d();
  }
  return d;
}

Integer lcm_of_denominators(std::span<const Scalar> xs) {
  Integer l = 1;
  for (const auto& x : xs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.a().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.b().get_den_mpz_t());
  }
  return l;
}

// Row-style Hermite normal form of integer vectors in Z^2: returns up to
// two rows (p, q), (0, r) with p > 0, r > 0 and 0 <= q < r.
std::vector<IntVec> hermite_rows(std::vector<IntVec> rows) {
  std::vector<IntVec> out;
  for (int col = 0; col < 2; ++col) {
    // Euclid on column `col` among the rows not yet used as pivots.
    while (true) {
      auto nonzero = [col](const IntVec& r) { return sgn(r[col]) != 0; };
      auto it = std::find_if(rows.begin(), rows.end(), nonzero);
      if (it == rows.end()) break;
      auto best = it;
      for (auto jt = it; jt != rows.end(); ++jt) {
        if (nonzero(*jt) && abs(Integer((*jt)[col])) < abs(Integer((*best)[col]))) best = jt;
      }
      bool reduced_any = false;
      for (auto jt = rows.begin(); jt != rows.end(); ++jt) {
        if (jt == best || !nonzero(*jt)) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), (*jt)[col].get_mpz_t(), (*best)[col].get_mpz_t());
        for (int k = 0; k < 2; ++k) (*jt)[k] -= q * (*best)[k];
        reduced_any = true;
      }
      if (!reduced_any) {
        IntVec pivot = *best;
        rows.erase(best);
        if (sgn(pivot[col]) < 0) {
          for (auto& v : pivot) v = -v;
        }
        out.push_back(pivot);
        break;
      }
    }
  }
  if (out.size() == 2 && sgn(out[0][0]) != 0 && sgn(out[1][1]) != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), out[0][1].get_mpz_t(), out[1][1].get_mpz_t());
    out[0][1] -= q * out[1][1];
  }
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalError("group coordinate exceeds 64-bit range");
  return z.get_si();
}

}  // namespace

std::vector<Scalar> lattice_basis(std::span<const Scalar> generators) {
  std::int64_t d = common_field(generators);
  Integer den = lcm_of_denominators(generators);
  std::vector<IntVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    Rational a = g.a() * den;
    Rational b = g.b() * den;
    rows.push_back({a.get_num(), b.get_num()});
  }
  std::vector<Scalar> basis;
  for (const auto& r : hermite_rows(std::move(rows))) {
    Rational a(r[0], den);
    Rational b(r[1], den);
    a.canonicalize();
    b.canonicalize();
    basis.emplace_back(a, b, sgn(b) == 0 ? 0 : d);
  }
  return basis;
}

IndexGroup IndexGroup::from_generators(std::span<const Scalar> gamma_generators, const Scalar& s) {
  if (gamma_generators.empty()) throw ConfigError("Gamma needs at least one generator");
  std::vector<Scalar> all(gamma_generators.begin(), gamma_generators.end());
  all.push_back(s);

  IndexGroup g;
  g.values_ = std::make_shared<ValueCache>();
  g.d_ = common_field(all);
  g.basis_ = lattice_basis(all);
  g.rank_ = static_cast<int>(g.basis_.size());
  g.shift_ = s;
  // Temporary identity Gamma so member() works while Gamma is being located.
  g.gamma_det_ = 1;
  g.gamma_adj_ = {{{1, 0}, {0, 1}}};

  for (const auto& b : lattice_basis(gamma_generators)) {
    auto coords = g.member(b);
    if (!coords) throw InternalError("Gamma basis element outside Omega");
    g.gamma_basis_.push_back(*coords);
  }
  if (static_cast<int>(g.gamma_basis_.size()) != g.rank_) {
    throw ConfigError("2s must lie in Gamma (Gamma has lower rank than Omega)");
  }
  if (g.rank_ == 1) {
    g.gamma_det_ = g.gamma_basis_[0].coords[0];
    g.gamma_adj_ = {{{1, 0}, {0, 1}}};
  } else {
    // Columns are the Gamma basis coordinates.
    std::int64_t p = g.gamma_basis_[0].coords[0], r = g.gamma_basis_[0].coords[1];
    std::int64_t q = g.gamma_basis_[1].coords[0], t = g.gamma_basis_[1].coords[1];
    g.gamma_det_ = p * t - q * r;
    g.gamma_adj_ = {{{t, -q}, {-r, p}}};
  }
  g.shift_element_ = *g.member(s);

  if (!g.member(Scalar(1L), Coset::Gamma)) throw ConfigError("1 must lie in Gamma");
  if (!g.member(s + s, Coset::Gamma)) throw ConfigError("2s must lie in Gamma");
  return g;
}

std::optional<GroupElement> IndexGroup::member(const Scalar& x, Coset coset) const {
  if (x.d() != 0 && d_ != 0 && x.d() != d_) {
    throw ConfigError("scalar uses sqrt(" + std::to_string(x.d()) + ") but the session field is sqrt(" +
                      std::to_string(d_) + ")");
  }
  if (x.d() != 0 && d_ == 0) return std::nullopt;

  Rational c0, c1;
  if (rank_ == 1) {
    const Scalar& e = basis_[0];
    if (sgn(e.b()) == 0) {
      if (sgn(x.b()) != 0) return std::nullopt;
      c0 = x.a() / e.a();
    } else {
      c0 = x.b() / e.b();
      if (x.a() != c0 * e.a()) return std::nullopt;
    }
  } else {
    const Scalar& e = basis_[0];
    const Scalar& f = basis_[1];
    Rational det = e.a() * f.b() - f.a() * e.b();
    c0 = (x.a() * f.b() - f.a() * x.b()) / det;
    c1 = (e.a() * x.b() - x.a() * e.b()) / det;
  }
  c0.canonicalize();
  c1.canonicalize();
  if (c0.get_den() != 1 || c1.get_den() != 1) return std::nullopt;
  GroupElement g(to_int64(c0.get_num()), to_int64(c1.get_num()));
  switch (coset) {
    case Coset::Omega:
      return g;
    case Coset::Gamma:
      return in_gamma(g) ? std::optional(g) : std::nullopt;
    case Coset::ShiftedGamma:
      return in_shifted_gamma(g) ? std::optional(g) : std::nullopt;
  }
  return std::nullopt;
}

bool IndexGroup::in_gamma(const GroupElement& g) const {
  for (int i = 0; i < 2; ++i) {
    std::int64_t w = gamma_adj_[i][0] * g.coords[0] + gamma_adj_[i][1] * g.coords[1];
    if (w % gamma_det_ != 0) return false;
  }
  return true;
}

struct IndexGroup::ValueCache {
  std::shared_mutex mutex;
  std::map<GroupElement, Scalar> values;
};

// Map nodes never move, so references stay valid after the lock is released.
const Scalar& IndexGroup::value(const GroupElement& g) const {
  {
    std::shared_lock lock(values_->mutex);
    auto it = values_->values.find(g);
    if (it != values_->values.end()) return it->second;
  }
  Scalar v;
  for (int k = 0; k < rank_; ++k) {
    if (g.coords[k] != 0) v += Scalar(static_cast<long>(g.coords[k])) * basis_[k];
  }
  std::unique_lock lock(values_->mutex);
  return values_->values.try_emplace(g, std::move(v)).first->second;
}

Scalar HomZ::operator()(const GroupElement& g) const {
  Scalar v;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (g.coords[k] != 0) v += Scalar(static_cast<long>(g.coords[k])) * values[k];
  }
  return v;
}

HomZ HomZ::identity(const IndexGroup& group) { return HomZ{group.basis()}; }

HomZ HomZ::zero(const IndexGroup& group) {
  return HomZ{std::vector<Scalar>(static_cast<std::size_t>(group.rank()))};
}

Scalar Character::operator()(const GroupElement& g) const {
  Scalar v(1L);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (g.coords[k] != 0) v *= values[k].pow(g.coords[k]);
  }
  return v;
}

Character Character::trivial(const IndexGroup& group) {
  return Character{std::vector<Scalar>(static_cast<std::size_t>(group.rank()), Scalar(1L))};
}

ScalingCheck scaling_preserves(const IndexGroup& group, const Scalar& c) {
  if (c.is_zero()) throw InputError("scaling factor must be nonzero");
  const Scalar ci = c.inverse();
  auto fail = [](Scalar w, std::string why) { return ScalingCheck{false, std::move(w), std::move(why)}; };

  for (const auto& b : group.basis()) {
    for (const Scalar& m : {c, ci}) {
      Scalar p = m * b;
      if (!group.member(p)) return fail(p, "scaling does not preserve lattice");
    }
  }
  for (const auto& gb : group.gamma_basis()) {
    Scalar gv = group.value(gb);
    for (const Scalar& m : {c, ci}) {
      Scalar p = m * gv;
      if (!group.member(p, Coset::Gamma)) return fail(p, "scaling does not preserve lattice");
    }
  }
  for (const Scalar& m : {c, ci}) {
    Scalar p = m * group.shift();
    if (!group.member(p, Coset::ShiftedGamma)) return fail(p, "scaling does not preserve the coset s+Gamma");
  }
  return ScalingCheck{true, std::nullopt, {}};
}

std::string degree_literal(const IndexGroup& group, const GroupElement& g) { return group.value(g).str(); }

}  // namespace supervir
