#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "supervir/grading.hpp"
#include "supervir/superalgebra.hpp"

namespace supervir {

/// A linear map given by its images on a finite set of basis vectors.
///
/// Invariants checked at construction: image parity equals vector parity
/// plus the declared parity, and with a declared degree g every image of a
/// degree-a vector is homogeneous of degree a + g.
class DerivationTable {
 public:
  DerivationTable(const Algebra& algebra, int declared_parity, std::optional<GroupElement> degree,
                  std::map<BasisVector, Element> images);

  int parity() const { return parity_; }
  const std::optional<GroupElement>& degree() const { return degree_; }
  const std::map<BasisVector, Element>& images() const { return images_; }

  bool in_domain(const BasisVector& b) const { return images_.count(b) != 0; }
  bool covers(const Element& x) const;
  /// Linear extension; throws OutOfWindow if x leaves the domain.
  Element apply(const Element& x) const;

 private:
  Variant variant_;
  int parity_;
  std::optional<GroupElement> degree_;
  std::map<BasisVector, Element> images_;
};

struct LeibnizViolation {
  BasisVector x;
  BasisVector y;
  Element residual;
};

struct LeibnizReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<LeibnizViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// phi(a) x for x of degree a.
Element d_phi(const Algebra& algebra, const HomZ& phi, const BasisVector& x);

DerivationTable d_phi_table(const Algebra& algebra, const HomZ& phi, const Window& w);

/// Table of ad_z = [z, .] on the window basis; z must be parity-homogeneous.
DerivationTable inner_derivation_table(const Algebra& algebra, const Element& z, const Window& w);

/// Checks D([x,y]) = [D x, y] + (-1)^{|D||x|} [x, D y] for every ordered
/// pair of window basis vectors. Pairs whose bracket leaves D's domain are
/// counted as skipped.
LeibnizReport leibniz_check(const Algebra& algebra, const DerivationTable& d, const Window& w, int jobs = 1);

/// x_a -> degree-(a + g) part of D(x_a).
DerivationTable degree_component(const Algebra& algebra, const DerivationTable& d, const GroupElement& g);

/// Shifts g with a nonzero degree component, i.e. deg(term) - deg(x) over
/// all image terms.
std::set<GroupElement> component_shifts(const DerivationTable& d);

/// Finitely supported y with [y, L_{0,0}] = v. Degree 0 follows the upward
/// recursion b_{0,j+1} = -a_{0,j}/(j+1); nonzero degrees solve
/// a b_{a,j} + (j+1) b_{a,j+1} = -a_{a,j} downward from the top level.
Element adjust_inner(const Algebra& algebra, const Element& v);

}  // namespace supervir
