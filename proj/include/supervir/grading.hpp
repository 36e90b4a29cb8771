#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supervir/scalar.hpp"

namespace supervir {

/// Element of the index group, as integer coordinates against the group's
/// canonical basis. Unused trailing coordinates are zero.
struct GroupElement {
  std::array<std::int64_t, 2> coords{};

  GroupElement() = default;
  explicit GroupElement(std::int64_t c0, std::int64_t c1 = 0) : coords{c0, c1} {}

  bool is_zero() const { return coords[0] == 0 && coords[1] == 0; }

  GroupElement operator-() const { return GroupElement(-coords[0], -coords[1]); }
  friend GroupElement operator+(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.coords[0] + y.coords[0], x.coords[1] + y.coords[1]);
  }
  friend GroupElement operator-(const GroupElement& x, const GroupElement& y) { return x + (-y); }
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

enum class Coset { Omega, Gamma, ShiftedGamma };

/// The finitely generated degree group Omega = <Gamma u {s}> inside Q(sqrt(d)),
/// with Gamma recorded as a sublattice.
class IndexGroup {
 public:
  /// Builds the canonical (Hermite normal form) Z-basis of the lattice
  /// spanned by generators and s. Requires 1 in Gamma and 2s in Gamma.
  static IndexGroup from_generators(std::span<const Scalar> gamma_generators, const Scalar& s);

  int rank() const { return rank_; }
  /// Field parameter, or 0 if every element is rational.
  std::int64_t d() const { return d_; }
  const std::vector<Scalar>& basis() const { return basis_; }
  const Scalar& shift() const { return shift_; }
  GroupElement shift_element() const { return shift_element_; }
  /// Gamma's canonical basis, as elements of Omega.
  const std::vector<GroupElement>& gamma_basis() const { return gamma_basis_; }

  std::optional<GroupElement> member(const Scalar& x, Coset coset = Coset::Omega) const;
  bool in_gamma(const GroupElement& g) const;
  bool in_shifted_gamma(const GroupElement& g) const { return in_gamma(g - shift_element_); }
  /// True when s lies in Gamma, so s + Gamma = Gamma.
  bool shift_in_gamma() const { return in_gamma(shift_element_); }

  const Scalar& value(const GroupElement& g) const;

  friend bool operator==(const IndexGroup& x, const IndexGroup& y) {
    return x.basis_ == y.basis_ && x.shift_ == y.shift_ && x.gamma_basis_ == y.gamma_basis_;
  }

 private:
  IndexGroup() = default;
  struct ValueCache;

  std::int64_t d_ = 0;
  int rank_ = 0;
  std::vector<Scalar> basis_;
  Scalar shift_;
  GroupElement shift_element_;
  std::vector<GroupElement> gamma_basis_;
  // Adjugate and determinant of the Gamma-in-Omega coordinate matrix.
  std::array<std::array<std::int64_t, 2>, 2> gamma_adj_{};
  std::int64_t gamma_det_ = 1;
  std::shared_ptr<ValueCache> values_;
};

/// Canonical Z-basis (Hermite normal form) of the lattice spanned by the
/// given field elements. Deterministic and independent of input order.
std::vector<Scalar> lattice_basis(std::span<const Scalar> generators);

/// Additive map Omega -> F, given by its values on the canonical basis.
struct HomZ {
  std::vector<Scalar> values;

  Scalar operator()(const GroupElement& g) const;
  /// The map alpha -> alpha.
  static HomZ identity(const IndexGroup& group);
  static HomZ zero(const IndexGroup& group);
};

/// Multiplicative map Omega -> F*, given by its (nonzero) values on the
/// canonical basis.
struct Character {
  std::vector<Scalar> values;

  Scalar operator()(const GroupElement& g) const;
  static Character trivial(const IndexGroup& group);
};

struct ScalingCheck {
  bool preserves = false;
  /// First product found outside the required lattice or coset.
  std::optional<Scalar> witness;
  std::string reason;
};

/// Tests c*Omega = Omega, c*Gamma = Gamma and c*(s + Gamma) = s + Gamma.
ScalingCheck scaling_preserves(const IndexGroup& group, const Scalar& c);

/// Degree literal as a field element, e.g. "3/2 + 1*sqrt(2)".
std::string degree_literal(const IndexGroup& group, const GroupElement& g);

}  // namespace supervir
