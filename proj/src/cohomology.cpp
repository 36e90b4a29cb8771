#include "supervir/cohomology.hpp"

#include "supervir/error.hpp"
#include "supervir/parallel.hpp"

namespace supervir {

namespace {

Scalar skew_sign(const BasisVector& x, const BasisVector& y) {
  return Scalar((parity(x) && parity(y)) ? -1L : 1L);
}

}  // namespace

// ------------------------------------------------------ LinearFunctional

LinearFunctional LinearFunctional::finitely_supported(std::map<BasisVector, Scalar> values) {
  LinearFunctional f;
  for (auto& [b, v] : values) {
    if (!v.is_zero()) f.values_.emplace(b, std::move(v));
  }
  return f;
}

LinearFunctional LinearFunctional::partial(std::map<BasisVector, Scalar> values) {
  LinearFunctional f;
  f.values_ = std::move(values);
  f.partial_ = true;
  return f;
}

Scalar LinearFunctional::value(const BasisVector& b) const {
  auto it = values_.find(b);
  if (it != values_.end()) return it->second;
  if (partial_) throw OutOfWindow("functional is undefined on a basis vector outside its window");
  return Scalar();
}

Scalar LinearFunctional::operator()(const Element& x) const {
  Scalar s;
  for (const auto& [b, c] : x.terms()) {
    auto it = values_.find(b);
    if (it != values_.end()) {
      s += c * it->second;
    } else if (partial_) {
      throw OutOfWindow("functional is undefined on a bracket support vector");
    }
  }
  return s;
}

void LinearFunctional::set(const BasisVector& b, const Scalar& v) {
  if (!partial_ && v.is_zero()) {
    values_.erase(b);
    return;
  }
  values_[b] = v;
}

// ------------------------------------------------------------ CocycleSpec

CocycleSpec CocycleSpec::coboundary(LinearFunctional g) {
  CocycleSpec s;
  s.form_ = Coboundary{std::move(g)};
  return s;
}

CocycleSpec CocycleSpec::table(const Algebra& algebra, const Window& w, const std::vector<CocycleEntry>& entries) {
  Table t;
  const auto basis = algebra.window_basis(w);
  t.domain.insert(basis.begin(), basis.end());
  for (const auto& e : entries) {
    algebra.validate(e.x);
    algebra.validate(e.y);
    if (!t.domain.count(e.x) || !t.domain.count(e.y)) {
      throw OutOfWindow("cocycle entry (" + algebra.literal(e.x) + ", " + algebra.literal(e.y) +
                        ") lies outside the table window");
    }
    BasisVector lo = e.x, hi = e.y;
    Scalar v = e.value;
    if (hi < lo) {
      std::swap(lo, hi);
      v = -skew_sign(lo, hi) * v;
    }
    if (lo == hi && !lo.odd() && !v.is_zero()) {
      throw InputError("psi(" + algebra.literal(lo) + ", " + algebra.literal(lo) +
                       ") must vanish for an even vector");
    }
    auto [it, inserted] = t.entries.try_emplace({lo, hi}, v);
    if (!inserted && it->second != v) {
      throw InputError("conflicting cocycle entries for (" + algebra.literal(lo) + ", " + algebra.literal(hi) + ")");
    }
  }
  CocycleSpec s;
  s.form_ = std::move(t);
  return s;
}

bool CocycleSpec::can_eval(const Element& x, const Element& y) const {
  const Table* t = as_table();
  if (!t) return true;
  for (const auto& [b, c] : x.terms()) {
    if (!t->domain.count(b)) return false;
  }
  for (const auto& [b, c] : y.terms()) {
    if (!t->domain.count(b)) return false;
  }
  return true;
}

Scalar CocycleSpec::eval(const Algebra& algebra, const BasisVector& x, const BasisVector& y) const {
  if (const Coboundary* cb = as_coboundary()) return cb->g(algebra.bracket(x, y));
  const Table& t = *as_table();
  if (!t.domain.count(x) || !t.domain.count(y)) {
    throw OutOfWindow("cocycle table has no value for the pair (" + algebra.literal(x) + ", " + algebra.literal(y) +
                      ")");
  }
  if (y < x) {
    auto it = t.entries.find({y, x});
    return it == t.entries.end() ? Scalar() : -skew_sign(x, y) * it->second;
  }
  auto it = t.entries.find({x, y});
  return it == t.entries.end() ? Scalar() : it->second;
}

Scalar CocycleSpec::eval(const Algebra& algebra, const Element& x, const Element& y) const {
  if (const Coboundary* cb = as_coboundary()) return cb->g(algebra.bracket(x, y));
  Scalar s;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) s += cx * cy * eval(algebra, bx, by);
  }
  return s;
}

// ----------------------------------------------------------------- checks

std::optional<Scalar> cocycle_jacobi_residual(const Algebra& algebra, const CocycleSpec& psi, const BasisVector& x,
                                              const BasisVector& y, const BasisVector& z) {
  const Element ex = algebra.element(x), ey = algebra.element(y), ez = algebra.element(z);
  const Element yz = algebra.bracket(ey, ez);
  const Element xy = algebra.bracket(ex, ey);
  const Element xz = algebra.bracket(ex, ez);
  if (!psi.can_eval(ex, yz) || !psi.can_eval(xy, ez) || !psi.can_eval(ey, xz)) return std::nullopt;
  Scalar r = psi.eval(algebra, ex, yz);
  r -= psi.eval(algebra, xy, ez);
  r -= skew_sign(x, y) * psi.eval(algebra, ey, xz);
  return r;
}

CocycleReport is_cocycle(const Algebra& algebra, const CocycleSpec& psi, const Window& w, int jobs) {
  const auto basis = algebra.window_basis(w);
  CocycleReport report;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ++report.checked_pairs;
      Scalar r = psi.eval(algebra, x, y) + skew_sign(x, y) * psi.eval(algebra, y, x);
      if (!r.is_zero()) report.violations.push_back({{x, y}, r});
    }
  }
  auto parts = parallel_map<CocycleReport>(basis.size(), jobs, [&](std::size_t i) {
    CocycleReport part;
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        auto r = cocycle_jacobi_residual(algebra, psi, basis[i], y, z);
        if (!r) {
          ++part.skipped;
          continue;
        }
        ++part.checked_triples;
        if (!r->is_zero()) part.violations.push_back({{basis[i], y, z}, *r});
      }
    }
    return part;
  });
  for (auto& part : parts) {
    report.checked_triples += part.checked_triples;
    report.skipped += part.skipped;
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

LinearFunctional trivialize(const Algebra& algebra, const CocycleSpec& psi, const Window& w) {
  if (algebra.variant() != Variant::SV && algebra.variant() != Variant::W) {
    throw InputError("trivialize applies to SV and W");
  }
  const IndexGroup& group = algebra.group();
  const BasisVector l00{Kind::L, GroupElement(), 0};
  const BasisVector l01{Kind::L, GroupElement(), 1};
  std::map<BasisVector, Scalar> f;

  for (const auto& deg : w.degrees) {
    const Scalar alpha = group.value(deg);
    for (Kind kind : {Kind::L, Kind::G}) {
      if (!algebra.is_valid(BasisVector{kind, deg, 0})) continue;
      Scalar prev;
      for (int i = 0; i <= w.i_max; ++i) {
        const BasisVector x{kind, deg, i};
        Scalar v;
        if (!alpha.is_zero()) {
          v = (psi.eval(algebra, l00, x) - Scalar(static_cast<long>(i)) * prev) * alpha.inverse();
        } else if (kind == Kind::L) {
          v = psi.eval(algebra, l00, BasisVector{Kind::L, deg, i + 1}) * Scalar::rational(1, i + 1);
        } else {
          v = psi.eval(algebra, l01, x) * Scalar::rational(2, 2 * i - 1);
        }
        f.emplace(x, v);
        prev = std::move(v);
      }
    }
  }
  return LinearFunctional::partial(std::move(f));
}

ResidualReport residual_check(const Algebra& algebra, const CocycleSpec& psi, const LinearFunctional& f,
                              const Window& w) {
  const auto basis = algebra.window_basis(w);
  ResidualReport report;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (x.kind == Kind::C || y.kind == Kind::C) continue;
      const Element xy = algebra.bracket(x, y);
      Scalar fx;
      try {
        fx = f(xy);
      } catch (const OutOfWindow&) {
        throw OutOfWindow("functional f is undefined on the support of [" + algebra.literal(x) + ", " +
                          algebra.literal(y) + "] = " + algebra.literal(xy));
      }
      Scalar phi = psi.eval(algebra, x, y) - fx;
      ResidualSector& sector = (x.odd() && y.odd()) ? report.gg : (x.odd() || y.odd()) ? report.lg : report.ll;
      ++sector.checked;
      if (!phi.is_zero()) sector.nonzero.push_back({x, y, std::move(phi)});
    }
  }
  return report;
}

CocycleSpec svir_central_cocycle(const Algebra& algebra, const Window& w, SVirConvention convention) {
  if (algebra.variant() != Variant::SVir0) throw InputError("the central cocycle lives on SVir0");
  const IndexGroup& group = algebra.group();
  const auto basis = algebra.window_basis(w);
  std::vector<CocycleEntry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const BasisVector& x = basis[i];
      const BasisVector& y = basis[j];
      if (x.kind != y.kind || !(x.degree + y.degree).is_zero()) continue;
      const Scalar& a = group.value(x.degree);
      Scalar v;
      if (x.kind == Kind::L) {
        v = (a * a * a - a) * Scalar::rational(1, 12);
      } else {
        v = (a * a - Scalar::rational(1, 4)) * Scalar::rational(1, 3);
        if (convention == SVirConvention::SignCorrected) v = -v;
      }
      if (!v.is_zero()) entries.push_back({x, y, v});
    }
  }
  return CocycleSpec::table(algebra, w, entries);
}

CocycleSpec materialize(const Algebra& algebra, const CocycleSpec& psi, const Window& w) {
  const auto basis = algebra.window_basis(w);
  std::vector<CocycleEntry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      Scalar v = psi.eval(algebra, basis[i], basis[j]);
      if (!v.is_zero()) entries.push_back({basis[i], basis[j], std::move(v)});
    }
  }
  return CocycleSpec::table(algebra, w, entries);
}

}  // namespace supervir
