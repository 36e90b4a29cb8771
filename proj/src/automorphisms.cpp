#include "supervir/automorphisms.hpp"

#include <utility>

#include "supervir/error.hpp"
#include "supervir/parallel.hpp"

namespace supervir {

namespace {

bool uses_odd_part(const Algebra& algebra) { return algebra.variant() != Variant::W; }

GroupElement scaled_degree(const IndexGroup& group, const Scalar& c, const GroupElement& g) {
  auto out = group.member(c * group.value(g));
  if (!out) throw InternalError("scaled degree left the index group; parameters were not validated");
  return *out;
}

}  // namespace

AutParams AutParams::identity(const IndexGroup& group) {
  return AutParams{Character::trivial(group), Scalar(1L), Scalar(1L), 1};
}

AutParams AutParams::parity_involution(const IndexGroup& group) {
  return AutParams{Character::trivial(group), Scalar(1L), Scalar(1L), -1};
}

AutValidation aut_validate(const Algebra& algebra, const AutParams& p) {
  const IndexGroup& group = algebra.group();
  AutValidation v;
  if (static_cast<int>(p.tau.values.size()) != group.rank()) {
    v.errors.push_back("tau must give one value per canonical basis element");
  }
  for (const auto& t : p.tau.values) {
    if (t.is_zero()) {
      v.errors.push_back("tau values must be nonzero");
      break;
    }
  }
  if (p.c.is_zero()) {
    v.errors.push_back("c must be invertible");
    return v;
  }
  ScalingCheck sc = scaling_preserves(group, p.c);
  if (!sc.preserves) v.errors.push_back(sc.reason + " (witness " + sc.witness->str() + ")");
  if (uses_odd_part(algebra)) {
    if (!p.r) {
      v.errors.push_back("a square root r of c is required");
    } else if (*p.r * *p.r != p.c) {
      v.errors.push_back("r^2 != c");
    }
    if (p.sign != 1 && p.sign != -1) v.errors.push_back("sign must be +1 or -1");
  }
  return v;
}

Element aut_apply(const Algebra& algebra, const AutParams& p, const BasisVector& x) {
  const IndexGroup& group = algebra.group();
  switch (x.kind) {
    case Kind::C:
      throw InputError("automorphisms act on SV and W only");
    case Kind::L: {
      Scalar k = p.tau(x.degree) * p.c.pow(x.level - 1);
      return algebra.element({Kind::L, scaled_degree(group, p.c, x.degree), x.level}, std::move(k));
    }
    case Kind::G: {
      if (!p.r) throw InputError("odd vectors need the square root r");
      Scalar k = Scalar(static_cast<long>(p.sign)) * p.tau(x.degree) * p.c.pow(x.level) * p.r->inverse();
      return algebra.element({Kind::G, scaled_degree(group, p.c, x.degree), x.level}, std::move(k));
    }
  }
  return algebra.zero();
}

Element aut_apply(const Algebra& algebra, const AutParams& p, const Element& x) {
  if (algebra.variant() != Variant::SV && algebra.variant() != Variant::W) {
    throw InputError("automorphisms act on SV and W only");
  }
  Element out = algebra.zero();
  for (const auto& [b, c] : x.terms()) out.axpy(c, aut_apply(algebra, p, b));
  return out;
}

HomReport aut_check_hom(const Algebra& algebra, const AutParams& p, const Window& w, int jobs) {
  const auto basis = algebra.window_basis(w);
  std::vector<Element> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(aut_apply(algebra, p, b));

  auto parts = parallel_map<HomReport>(basis.size(), jobs, [&](std::size_t i) {
    HomReport part;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++part.checked;
      Element lhs = aut_apply(algebra, p, algebra.bracket(basis[i], basis[j]));
      Element rhs = algebra.bracket(images[i], images[j]);
      if (lhs != rhs) part.violations.push_back({basis[i], basis[j], std::move(lhs), std::move(rhs)});
    }
    return part;
  });
  HomReport report;
  for (auto& part : parts) {
    report.checked += part.checked;
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

AutParams aut_compose(const Algebra& algebra, const AutParams& p1, const AutParams& p2) {
  const IndexGroup& group = algebra.group();
  AutParams out;
  for (int k = 0; k < group.rank(); ++k) {
    auto moved = group.member(p2.c * group.basis()[static_cast<std::size_t>(k)]);
    if (!moved) throw InputError("c2 moves a canonical basis element outside the lattice");
    GroupElement unit;
    unit.coords[static_cast<std::size_t>(k)] = 1;
    out.tau.values.push_back(p1.tau(*moved) * p2.tau(unit));
  }
  out.c = p1.c * p2.c;
  if (p1.r && p2.r) out.r = *p1.r * *p2.r;
  out.sign = p1.sign * p2.sign;
  return out;
}

AutParams aut_inverse(const Algebra& algebra, const AutParams& p) {
  const IndexGroup& group = algebra.group();
  const Scalar ci = p.c.inverse();
  AutParams out;
  for (const auto& b : group.basis()) {
    auto moved = group.member(ci * b);
    if (!moved) throw InputError("c^{-1} moves a canonical basis element outside the lattice");
    out.tau.values.push_back(p.tau(*moved).inverse());
  }
  out.c = ci;
  if (p.r) out.r = p.r->inverse();
  out.sign = p.sign;
  return out;
}

}  // namespace supervir
