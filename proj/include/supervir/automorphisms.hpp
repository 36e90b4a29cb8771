#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supervir/grading.hpp"
#include "supervir/superalgebra.hpp"

namespace supervir {

/// Parameters of the automorphism
///   L_{a,i} -> tau(a) c^{i-1} L_{ca,i},
///   G_{a,i} -> sign tau(a) c^i r^{-1} G_{ca,i},   r^2 = c.
/// For the even algebra W only tau and c are used.
struct AutParams {
  Character tau;
  Scalar c{1L};
  std::optional<Scalar> r;
  int sign = 1;

  static AutParams identity(const IndexGroup& group);
  /// tau = 1, c = 1, r = 1, sign = -1: flips every odd vector.
  static AutParams parity_involution(const IndexGroup& group);

  friend bool operator==(const AutParams& x, const AutParams& y) {
    return x.tau.values == y.tau.values && x.c == y.c && x.r == y.r && x.sign == y.sign;
  }
};

struct AutValidation {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

AutValidation aut_validate(const Algebra& algebra, const AutParams& p);

/// Applies the automorphism; assumes p has been validated.
Element aut_apply(const Algebra& algebra, const AutParams& p, const Element& x);
Element aut_apply(const Algebra& algebra, const AutParams& p, const BasisVector& x);

struct HomViolation {
  BasisVector x;
  BasisVector y;
  Element image_of_bracket;
  Element bracket_of_images;
};

struct HomReport {
  std::size_t checked = 0;
  std::vector<HomViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks p([x,y]) = [p(x), p(y)] for every ordered pair of window basis
/// vectors. Does not validate p, so tampered parameters can be examined.
HomReport aut_check_hom(const Algebra& algebra, const AutParams& p, const Window& w, int jobs = 1);

/// Parameters of p1 o p2: (tau, c1 c2, r1 r2, sign1 sign2) with
/// tau(a) = tau1(c2 a) tau2(a).
AutParams aut_compose(const Algebra& algebra, const AutParams& p1, const AutParams& p2);

/// Inverse parameters: tau'(a) = tau(c^{-1} a)^{-1}, c^{-1}, r^{-1}, sign.
AutParams aut_inverse(const Algebra& algebra, const AutParams& p);

}  // namespace supervir
