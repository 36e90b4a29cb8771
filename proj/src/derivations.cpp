#include "supervir/derivations.hpp"

#include <utility>

#include "supervir/error.hpp"
#include "supervir/parallel.hpp"

namespace supervir {

DerivationTable::DerivationTable(const Algebra& algebra, int declared_parity, std::optional<GroupElement> degree,
                                 std::map<BasisVector, Element> images)
    : variant_(algebra.variant()), parity_(declared_parity), degree_(degree), images_(std::move(images)) {
  if (parity_ != 0 && parity_ != 1) throw InputError("derivation parity must be even or odd");
  for (const auto& [x, img] : images_) {
    algebra.validate(x);
    if (img.variant() != variant_) throw InputError("derivation image in the wrong algebra variant");
    for (const auto& [b, c] : img.terms()) {
      if ((supervir::parity(x) + parity_) % 2 != supervir::parity(b)) {
        throw InputError("image of " + algebra.literal(x) + " has the wrong parity for an " +
                         (parity_ ? "odd" : "even") + " map");
      }
      if (degree_ && b.kind != Kind::C && b.degree != x.degree + *degree_) {
        throw InputError("image of " + algebra.literal(x) + " is not of the declared degree");
      }
    }
  }
}

bool DerivationTable::covers(const Element& x) const {
  for (const auto& [b, c] : x.terms()) {
    if (!in_domain(b)) return false;
  }
  return true;
}

Element DerivationTable::apply(const Element& x) const {
  Element out(variant_);
  for (const auto& [b, c] : x.terms()) {
    auto it = images_.find(b);
    if (it == images_.end()) throw OutOfWindow("derivation table has no image for a basis vector");
    out.axpy(c, it->second);
  }
  return out;
}

Element d_phi(const Algebra& algebra, const HomZ& phi, const BasisVector& x) {
  if (algebra.variant() != Variant::SV && algebra.variant() != Variant::W) {
    throw InputError("D_phi is defined on SV and W");
  }
  return algebra.element(x, phi(x.degree));
}

DerivationTable d_phi_table(const Algebra& algebra, const HomZ& phi, const Window& w) {
  std::map<BasisVector, Element> images;
  for (const auto& b : algebra.window_basis(w)) images.emplace(b, d_phi(algebra, phi, b));
  return DerivationTable(algebra, 0, GroupElement(), std::move(images));
}

DerivationTable inner_derivation_table(const Algebra& algebra, const Element& z, const Window& w) {
  auto p = z.homogeneous_parity();
  if (!p) throw InputError("ad_z needs a parity-homogeneous z");
  std::map<BasisVector, Element> images;
  for (const auto& b : algebra.window_basis(w)) images.emplace(b, algebra.bracket(z, algebra.element(b)));
  return DerivationTable(algebra, *p, z.homogeneous_degree(), std::move(images));
}

LeibnizReport leibniz_check(const Algebra& algebra, const DerivationTable& d, const Window& w, int jobs) {
  const auto basis = algebra.window_basis(w);
  for (const auto& b : basis) {
    if (!d.in_domain(b)) throw InputError("derivation table does not cover the window basis");
  }
  const std::size_t n = basis.size();
  std::vector<Element> images;
  images.reserve(n);
  for (const auto& y : basis) images.push_back(d.images().at(y));
  auto results = parallel_map<LeibnizReport>(n, jobs, [&](std::size_t i) {
    LeibnizReport part;
    const auto& x = basis[i];
    const Element ex = algebra.element(x);
    const Element& dx = images[i];
    const Scalar sign((d.parity() && parity(x)) ? -1L : 1L);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& y = basis[j];
      const Element ey = algebra.element(y);
      const Element xy = algebra.bracket(x, y);
      if (!d.covers(xy)) {
        ++part.skipped;
        continue;
      }
      ++part.checked;
      Element r = d.apply(xy);
      r -= algebra.bracket(dx, ey);
      r.axpy(-sign, algebra.bracket(ex, images[j]));
      if (!r.is_zero()) part.violations.push_back({x, y, std::move(r)});
    }
    return part;
  });
  LeibnizReport report;
  for (auto& part : results) {
    report.checked += part.checked;
    report.skipped += part.skipped;
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

DerivationTable degree_component(const Algebra& algebra, const DerivationTable& d, const GroupElement& g) {
  std::map<BasisVector, Element> images;
  for (const auto& [x, img] : d.images()) images.emplace(x, img.degree_part(x.degree + g));
  return DerivationTable(algebra, d.parity(), g, std::move(images));
}

std::set<GroupElement> component_shifts(const DerivationTable& d) {
  std::set<GroupElement> out;
  for (const auto& [x, img] : d.images()) {
    for (const auto& [b, c] : img.terms()) out.insert(b.degree - x.degree);
  }
  return out;
}

Element adjust_inner(const Algebra& algebra, const Element& v) {
  if (algebra.variant() != Variant::SV && algebra.variant() != Variant::W) {
    throw InputError("adjust_inner applies to SV and W");
  }
  if (v.variant() != algebra.variant()) throw InputError("element variant does not match the algebra");

  // Group v's coefficients by (kind, degree) into level-indexed columns.
  std::map<std::pair<Kind, GroupElement>, std::map<int, Scalar>> columns;
  for (const auto& [b, c] : v.terms()) {
    if (b.kind == Kind::C) throw InputError("adjust_inner: unexpected central term");
    columns[{b.kind, b.degree}][b.level] = c;
  }

  Element y = algebra.zero();
  for (const auto& [key, coeffs] : columns) {
    const auto& [kind, degree] = key;
    const Scalar alpha = algebra.group().value(degree);
    auto a = [&](int j) {
      auto it = coeffs.find(j);
      return it == coeffs.end() ? Scalar() : it->second;
    };
    const int top = coeffs.rbegin()->first;
    if (alpha.is_zero()) {
      for (int j = 0; j <= top; ++j) {
        y.add_term({kind, degree, j + 1}, -a(j) * Scalar::rational(1, j + 1));
      }
    } else {
      const Scalar inv = alpha.inverse();
      Scalar next;  // b_{a, j+1}
      for (int j = top; j >= 0; --j) {
        Scalar b = (-a(j) - Scalar(static_cast<long>(j + 1)) * next) * inv;
        y.add_term({kind, degree, j}, b);
        next = std::move(b);
      }
    }
  }
  return y;
}

}  // namespace supervir
