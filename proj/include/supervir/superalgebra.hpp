#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supervir/grading.hpp"
#include "supervir/scalar.hpp"

namespace supervir {

enum class Variant {
  SV,     ///< not-finitely graded superalgebra, basis L_{a,i}, G_{m,j}
  W,      ///< even part spanned by L_{a,i}
  SVir,   ///< levels fixed at 0, with central element C
  SVir0,  ///< SVir without C
};

/// Sign convention for the central term of the odd-odd bracket in SVir.
enum class SVirConvention {
  /// (1/3)(m^2 - 1/4) exactly as usually quoted alongside (b - a) L_{a+b}.
  AsPublished,
  /// -(1/3)(m^2 - 1/4); the sign that makes the super-Jacobi identity hold
  /// together with (a^3 - a)/12 and the (b - a) convention.
  SignCorrected,
};

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

enum class Kind : std::uint8_t { L, G, C };

struct BasisVector {
  Kind kind = Kind::L;
  GroupElement degree;
  int level = 0;

  bool odd() const { return kind == Kind::G; }
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

inline int parity(const BasisVector& b) { return b.odd() ? 1 : 0; }

/// A finite set of degrees (closed under negation, containing 0) plus a
/// level cap. Windows bound enumerations only; brackets are never truncated.
struct Window {
  std::set<GroupElement> degrees;
  int i_max = 0;

  /// All degrees with every coordinate in [-bound, bound].
  static Window box(const IndexGroup& group, int bound, int i_max);
  static Window from_degrees(std::set<GroupElement> degrees, int i_max);

  /// Degrees {a + b} for a, b in the window and level cap 2 * i_max: the
  /// smallest window containing every bracket of two window vectors.
  Window pair_closure() const;

  bool contains_degree(const GroupElement& g) const { return degrees.count(g) != 0; }
};

/// Finite sparse linear combination of basis vectors, tagged with the
/// algebra variant it belongs to. Zero coefficients are never stored and
/// terms are kept sorted, so equality is structural.
class Element {
 public:
  using Terms = std::map<BasisVector, Scalar>;

  explicit Element(Variant v) : variant_(v) {}
  Element(Variant v, const BasisVector& b, Scalar coeff = Scalar(1L));

  Variant variant() const { return variant_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const BasisVector& b) const;
  void add_term(const BasisVector& b, const Scalar& coeff);
  void add_term(const BasisVector& b, Scalar&& coeff);
  /// this += k * other
  void axpy(const Scalar& k, const Element& other);

  /// Parity if every term has the same parity.
  std::optional<int> homogeneous_parity() const;
  /// Degree if every non-central term has the same degree.
  std::optional<GroupElement> homogeneous_degree() const;
  /// Terms of the given degree (C counts as degree 0).
  Element degree_part(const GroupElement& g) const;
  Element parity_part(int p) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& k);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Scalar& k, Element x) { return x *= k; }

  friend bool operator==(const Element& x, const Element& y) {
    return x.variant_ == y.variant_ && x.terms_ == y.terms_;
  }

 private:
  void check_variant(const Element& o) const;

  Variant variant_;
  Terms terms_;
};

struct CentralityReport {
  bool central = true;
  std::optional<BasisVector> witness;
  std::optional<Element> witness_bracket;
};

struct SpanReport {
  std::set<BasisVector> reached;
  std::set<BasisVector> missing;
  std::size_t dimension = 0;
  int rounds = 0;
};

/// One algebra variant over one index group: validates basis vectors and
/// evaluates brackets exactly.
class Algebra {
 public:
  Algebra(IndexGroup group, Variant variant, SVirConvention convention = SVirConvention::AsPublished);

  const IndexGroup& group() const { return group_; }
  Variant variant() const { return variant_; }
  SVirConvention convention() const { return convention_; }

  /// Throws InputError unless b is a basis vector of this variant.
  void validate(const BasisVector& b) const;
  bool is_valid(const BasisVector& b) const;

  BasisVector L(const GroupElement& degree, int level = 0) const;
  BasisVector G(const GroupElement& degree, int level = 0) const;
  BasisVector C() const;
  /// Same, taking the degree as a field element.
  BasisVector L(const Scalar& degree, int level = 0) const;
  BasisVector G(const Scalar& degree, int level = 0) const;

  Element zero() const { return Element(variant_); }
  Element element(const BasisVector& b, Scalar coeff = Scalar(1L)) const;

  Element bracket(const BasisVector& x, const BasisVector& y) const;
  Element bracket(const Element& x, const Element& y) const;

  /// [x,y] + (-1)^{|x||y|} [y,x]
  Element skew_residual(const BasisVector& x, const BasisVector& y) const;
  /// [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]
  Element jacobi_residual(const BasisVector& x, const BasisVector& y, const BasisVector& z) const;
  Element adjoint(const Element& z, const Element& x) const { return bracket(z, x); }

  CentralityReport is_central(const Element& z, const Window& w) const;

  /// Basis of the central elements supported on the window, relative to the
  /// window basis (exact kernel of x -> ([x,b])_b).
  std::vector<Element> window_center(const Window& w) const;

  /// Closure of the generating set {L_{a,0}, L_{0,1}, G_{m,0}} under the
  /// bracket, projected onto the window.
  SpanReport generate_span(const Window& w) const;

  /// Sorted basis vectors supported on the window.
  std::vector<BasisVector> window_basis(const Window& w) const;

  /// Literal form, e.g. "L(3/2, 0)", "G(1/2 + 1*sqrt(2), 2)", "C".
  std::string literal(const BasisVector& b) const;
  std::string literal(const Element& x) const;

 private:
  void check(const Element& x) const;
  void add_basis_bracket(Element& out, const BasisVector& x, const BasisVector& y, const Scalar& k) const;

  IndexGroup group_;
  Variant variant_;
  SVirConvention convention_;
};

}  // namespace supervir
