#include "supervir/superalgebra.hpp"

#include <sstream>
#include <utility>

#include "supervir/error.hpp"
#include "supervir/linalg.hpp"

namespace supervir {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::SV:
      return "SV";
    case Variant::W:
      return "W";
    case Variant::SVir:
      return "SVir";
    case Variant::SVir0:
      return "SVir0";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "SV") return Variant::SV;
  if (s == "W") return Variant::W;
  if (s == "SVir") return Variant::SVir;
  if (s == "SVir0") return Variant::SVir0;
  throw InputError("unknown algebra variant '" + s + "' (expected SV, W, SVir or SVir0)");
}

// ---------------------------------------------------------------- Window

Window Window::box(const IndexGroup& group, int bound, int i_max) {
  if (bound < 0 || i_max < 0) throw InputError("window bounds must be nonnegative");
  Window w;
  w.i_max = i_max;
  int b1 = group.rank() > 1 ? bound : 0;
  for (int c0 = -bound; c0 <= bound; ++c0) {
    for (int c1 = -b1; c1 <= b1; ++c1) w.degrees.insert(GroupElement(c0, c1));
  }
  return w;
}

Window Window::from_degrees(std::set<GroupElement> degrees, int i_max) {
  if (i_max < 0) throw InputError("window level cap must be nonnegative");
  if (degrees.count(GroupElement()) == 0) throw InputError("window must contain degree 0");
  for (const auto& g : degrees) {
    if (degrees.count(-g) == 0) throw InputError("window degrees must be closed under negation");
  }
  Window w;
  w.degrees = std::move(degrees);
  w.i_max = i_max;
  return w;
}

Window Window::pair_closure() const {
  Window w;
  w.i_max = 2 * i_max;
  for (const auto& a : degrees) {
    for (const auto& b : degrees) w.degrees.insert(a + b);
  }
  return w;
}

// --------------------------------------------------------------- Element

Element::Element(Variant v, const BasisVector& b, Scalar coeff) : variant_(v) {
  if (!coeff.is_zero()) terms_.emplace(b, std::move(coeff));
}

Scalar Element::coefficient(const BasisVector& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const BasisVector& b, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_term(const BasisVector& b, Scalar&& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, std::move(coeff));
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::axpy(const Scalar& k, const Element& other) {
  check_variant(other);
  if (k.is_zero()) return;
  for (const auto& [b, c] : other.terms_) add_term(b, k * c);
}

void Element::check_variant(const Element& o) const {
  if (o.variant_ != variant_) {
    throw InputError("cannot combine elements of variants " + to_string(variant_) + " and " +
                     to_string(o.variant_));
  }
}

std::optional<int> Element::homogeneous_parity() const {
  if (terms_.empty()) return 0;
  int p = parity(terms_.begin()->first);
  for (const auto& [b, c] : terms_) {
    if (parity(b) != p) return std::nullopt;
  }
  return p;
}

std::optional<GroupElement> Element::homogeneous_degree() const {
  std::optional<GroupElement> deg;
  for (const auto& [b, c] : terms_) {
    if (deg && *deg != b.degree) return std::nullopt;
    deg = b.degree;
  }
  return deg ? deg : std::optional(GroupElement());
}

Element Element::degree_part(const GroupElement& g) const {
  Element r(variant_);
  for (const auto& [b, c] : terms_) {
    if (b.degree == g) r.terms_.emplace(b, c);
  }
  return r;
}

Element Element::parity_part(int p) const {
  Element r(variant_);
  for (const auto& [b, c] : terms_) {
    if (parity(b) == p) r.terms_.emplace(b, c);
  }
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  axpy(Scalar(1L), o);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  axpy(Scalar(-1L), o);
  return *this;
}

Element& Element::operator*=(const Scalar& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= k;
  return *this;
}

// --------------------------------------------------------------- Algebra

Algebra::Algebra(IndexGroup group, Variant variant, SVirConvention convention)
    : group_(std::move(group)), variant_(variant), convention_(convention) {}

bool Algebra::is_valid(const BasisVector& b) const {
  bool leveled = variant_ == Variant::SV || variant_ == Variant::W;
  switch (b.kind) {
    case Kind::L:
      return b.level >= 0 && (leveled || b.level == 0) && group_.in_gamma(b.degree);
    case Kind::G:
      return variant_ != Variant::W && b.level >= 0 && (leveled || b.level == 0) &&
             group_.in_shifted_gamma(b.degree);
    case Kind::C:
      return variant_ == Variant::SVir && b.degree.is_zero() && b.level == 0;
  }
  return false;
}

void Algebra::validate(const BasisVector& b) const {
  if (is_valid(b)) return;
  std::string why;
  switch (b.kind) {
    case Kind::L:
      why = "L needs a degree in Gamma";
      break;
    case Kind::G:
      why = variant_ == Variant::W ? "W has no odd basis vectors" : "G needs a degree in s+Gamma";
      break;
    case Kind::C:
      why = "C exists only in SVir";
      break;
  }
  if (b.level < 0) why = "levels must be nonnegative";
  if (b.level > 0 && (variant_ == Variant::SVir || variant_ == Variant::SVir0)) {
    why = to_string(variant_) + " has only level 0";
  }
  throw InputError("invalid basis vector for " + to_string(variant_) + ": " + why);
}

BasisVector Algebra::L(const GroupElement& degree, int level) const {
  BasisVector b{Kind::L, degree, level};
  validate(b);
  return b;
}

BasisVector Algebra::G(const GroupElement& degree, int level) const {
  BasisVector b{Kind::G, degree, level};
  validate(b);
  return b;
}

BasisVector Algebra::C() const {
  BasisVector b{Kind::C, GroupElement(), 0};
  validate(b);
  return b;
}

BasisVector Algebra::L(const Scalar& degree, int level) const {
  auto g = group_.member(degree);
  if (!g) throw InputError("degree " + degree.str() + " is not in the index group");
  return L(*g, level);
}

BasisVector Algebra::G(const Scalar& degree, int level) const {
  auto g = group_.member(degree);
  if (!g) throw InputError("degree " + degree.str() + " is not in the index group");
  return G(*g, level);
}

Element Algebra::element(const BasisVector& b, Scalar coeff) const {
  validate(b);
  return Element(variant_, b, std::move(coeff));
}

void Algebra::check(const Element& x) const {
  if (x.variant() != variant_) {
    throw InputError("element of variant " + to_string(x.variant()) + " used in algebra " + to_string(variant_));
  }
}

void Algebra::add_basis_bracket(Element& out, const BasisVector& x, const BasisVector& y, const Scalar& k) const {
  if (x.kind == Kind::C || y.kind == Kind::C) return;
  const Scalar& a = group_.value(x.degree);
  const Scalar& b = group_.value(y.degree);
  const GroupElement deg = x.degree + y.degree;
  const int lv = x.level + y.level;
  const bool central = variant_ == Variant::SVir && deg.is_zero();

  if (x.kind == Kind::L && y.kind == Kind::L) {
    out.add_term({Kind::L, deg, lv}, (b - a) * k);
    if (lv >= 1 && y.level != x.level) out.add_term({Kind::L, deg, lv - 1}, Scalar(static_cast<long>(y.level - x.level)) * k);
    if (central) out.add_term({Kind::C, GroupElement(), 0}, k * (a * a * a - a) * Scalar::rational(1, 12));
    return;
  }
  if (x.kind == Kind::L && y.kind == Kind::G) {
    // (m - a/2) G_{a+m,i+j} + (j - i/2) G_{a+m,i+j-1}
    out.add_term({Kind::G, deg, lv}, (b - a * Scalar::rational(1, 2)) * k);
    if (lv >= 1 && 2 * y.level != x.level) out.add_term({Kind::G, deg, lv - 1}, Scalar::rational(2L * y.level - x.level, 2) * k);
    return;
  }
  if (x.kind == Kind::G && y.kind == Kind::L) {
    // [G, L] = -[L, G]
    add_basis_bracket(out, y, x, -k);
    return;
  }
  // G, G
  out.add_term({Kind::L, deg, lv}, Scalar(2L) * k);
  if (central) {
    Scalar c = (a * a - Scalar::rational(1, 4)) * Scalar::rational(1, 3);
    if (convention_ == SVirConvention::SignCorrected) c = -c;
    out.add_term({Kind::C, GroupElement(), 0}, k * c);
  }
}

Element Algebra::bracket(const BasisVector& x, const BasisVector& y) const {
  Element out(variant_);
  add_basis_bracket(out, x, y, Scalar(1L));
  return out;
}

Element Algebra::bracket(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element out(variant_);
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) add_basis_bracket(out, bx, by, cx * cy);
  }
  return out;
}

Element Algebra::skew_residual(const BasisVector& x, const BasisVector& y) const {
  Element r = bracket(x, y);
  Element back = bracket(y, x);
  r.axpy(Scalar((parity(x) && parity(y)) ? -1L : 1L), back);
  return r;
}

Element Algebra::jacobi_residual(const BasisVector& x, const BasisVector& y, const BasisVector& z) const {
  const Element ex = element(x), ey = element(y), ez = element(z);
  Element r = bracket(ex, bracket(ey, ez));
  r -= bracket(bracket(ex, ey), ez);
  r.axpy(Scalar((parity(x) && parity(y)) ? 1L : -1L), bracket(ey, bracket(ex, ez)));
  return r;
}

std::vector<BasisVector> Algebra::window_basis(const Window& w) const {
  std::set<BasisVector> out;
  const bool leveled = variant_ == Variant::SV || variant_ == Variant::W;
  const int top = leveled ? w.i_max : 0;
  for (const auto& g : w.degrees) {
    for (int i = 0; i <= top; ++i) {
      BasisVector l{Kind::L, g, i};
      if (is_valid(l)) out.insert(l);
      BasisVector gv{Kind::G, g, i};
      if (is_valid(gv)) out.insert(gv);
    }
  }
  if (variant_ == Variant::SVir) out.insert({Kind::C, GroupElement(), 0});
  return {out.begin(), out.end()};
}

CentralityReport Algebra::is_central(const Element& z, const Window& w) const {
  check(z);
  for (const auto& b : window_basis(w)) {
    Element r = bracket(z, element(b));
    if (!r.is_zero()) return CentralityReport{false, b, std::move(r)};
  }
  return CentralityReport{};
}

std::vector<Element> Algebra::window_center(const Window& w) const {
  using Key = std::pair<std::size_t, BasisVector>;
  const auto basis = window_basis(w);
  std::vector<SparseVec<Key>> images;
  images.reserve(basis.size());
  for (const auto& x : basis) {
    SparseVec<Key> img;
    for (std::size_t p = 0; p < basis.size(); ++p) {
      const Element xb = bracket(x, basis[p]);
      for (const auto& [b, c] : xb.terms()) img.emplace(Key{p, b}, c);
    }
    images.push_back(std::move(img));
  }
  std::vector<Element> center;
  for (const auto& combo : kernel_basis(images)) {
    Element z(variant_);
    for (const auto& [n, c] : combo) z.add_term(basis[n], c);
    center.push_back(std::move(z));
  }
  return center;
}

SpanReport Algebra::generate_span(const Window& w) const {
  if (variant_ != Variant::SV && variant_ != Variant::W) {
    throw InputError("generate_span applies to SV and W");
  }
  const auto basis = window_basis(w);
  const std::set<BasisVector> in_window(basis.begin(), basis.end());
  auto project = [&](const Element& e) {
    SparseVec<BasisVector> v;
    for (const auto& [b, c] : e.terms()) {
      if (in_window.count(b)) v.emplace(b, c);
    }
    return v;
  };
  auto to_element = [&](const SparseVec<BasisVector>& v) {
    Element e(variant_);
    for (const auto& [b, c] : v) e.add_term(b, c);
    return e;
  };

  EchelonBasis<BasisVector> span;
  std::vector<Element> members;
  std::vector<Element> frontier;
  for (const auto& b : basis) {
    bool generator = b.level == 0 && (b.kind == Kind::L || b.kind == Kind::G);
    generator = generator || (b.kind == Kind::L && b.level == 1 && b.degree.is_zero());
    if (!generator) continue;
    if (auto row = span.insert(SparseVec<BasisVector>{{b, Scalar(1L)}})) frontier.push_back(to_element(*row));
  }

  SpanReport report;
  while (!frontier.empty()) {
    ++report.rounds;
    members.insert(members.end(), frontier.begin(), frontier.end());
    std::vector<Element> next;
    for (const auto& f : frontier) {
      for (const auto& m : members) {
        if (auto row = span.insert(project(bracket(f, m)))) next.push_back(to_element(*row));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& b : basis) {
    if (span.contains(SparseVec<BasisVector>{{b, Scalar(1L)}})) {
      report.reached.insert(b);
    } else {
      report.missing.insert(b);
    }
  }
  report.dimension = span.rank();
  return report;
}

std::string Algebra::literal(const BasisVector& b) const {
  if (b.kind == Kind::C) return "C";
  std::ostringstream os;
  os << (b.kind == Kind::L ? "L(" : "G(") << degree_literal(group_, b.degree) << ", " << b.level << ")";
  return os.str();
}

std::string Algebra::literal(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.str() << ")*";
    os << literal(b);
  }
  return os.str();
}

}  // namespace supervir
