#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "supervir/superalgebra.hpp"

namespace supervir {

/// Linear functional on the algebra, given by values on basis vectors.
///
/// A finitely supported functional is zero off its map. A partial one (as
/// produced by trivialize) is defined only on its keys, and evaluating it
/// elsewhere throws OutOfWindow.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  static LinearFunctional finitely_supported(std::map<BasisVector, Scalar> values);
  static LinearFunctional partial(std::map<BasisVector, Scalar> values);

  bool is_partial() const { return partial_; }
  bool defined_on(const BasisVector& b) const { return !partial_ || values_.count(b) != 0; }
  Scalar value(const BasisVector& b) const;
  Scalar operator()(const Element& x) const;
  const std::map<BasisVector, Scalar>& values() const { return values_; }

  /// Sets one value (used for perturbations and by trivialize).
  void set(const BasisVector& b, const Scalar& v);

 private:
  std::map<BasisVector, Scalar> values_;
  bool partial_ = false;
};

struct CocycleEntry {
  BasisVector x;
  BasisVector y;
  Scalar value;
};

/// A 2-cocycle candidate: either the coboundary psi_g(x,y) = g([x,y]) or a
/// finite table on a window, extended by super skew-symmetry
/// psi(y,x) = -(-1)^{|x||y|} psi(x,y). Only one orientation is stored.
class CocycleSpec {
 public:
  struct Coboundary {
    LinearFunctional g;
  };
  struct Table {
    std::set<BasisVector> domain;
    std::map<std::pair<BasisVector, BasisVector>, Scalar> entries;
  };

  static CocycleSpec coboundary(LinearFunctional g);
  /// Entries may be given in either orientation; conflicting duplicates and
  /// nonzero psi(x,x) for even x are rejected.
  static CocycleSpec table(const Algebra& algebra, const Window& w, const std::vector<CocycleEntry>& entries);

  bool is_coboundary() const { return std::holds_alternative<Coboundary>(form_); }
  const Coboundary* as_coboundary() const { return std::get_if<Coboundary>(&form_); }
  const Table* as_table() const { return std::get_if<Table>(&form_); }

  bool can_eval(const Element& x, const Element& y) const;
  Scalar eval(const Algebra& algebra, const BasisVector& x, const BasisVector& y) const;
  Scalar eval(const Algebra& algebra, const Element& x, const Element& y) const;

 private:
  std::variant<Coboundary, Table> form_;
};

struct CocycleViolation {
  std::vector<BasisVector> args;  // pair (skew) or triple (Jacobi)
  Scalar residual;
};

struct CocycleReport {
  std::size_t checked_pairs = 0;
  std::size_t checked_triples = 0;
  std::size_t skipped = 0;
  std::vector<CocycleViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// psi(x,[y,z]) - psi([x,y],z) - (-1)^{|x||y|} psi(y,[x,z]); nullopt when a
/// table cocycle cannot evaluate one of the terms.
std::optional<Scalar> cocycle_jacobi_residual(const Algebra& algebra, const CocycleSpec& psi, const BasisVector& x,
                                              const BasisVector& y, const BasisVector& z);

/// Skew super-symmetry over all window pairs and the cocycle identity over
/// all window triples.
CocycleReport is_cocycle(const Algebra& algebra, const CocycleSpec& psi, const Window& w, int jobs = 1);

/// The functional f, level by level on the window:
///   f(L_{0,i}) = psi(L_{0,0}, L_{0,i+1}) / (i+1)
///   f(L_{a,i}) = (psi(L_{0,0}, L_{a,i}) - i f(L_{a,i-1})) / a
///   f(G_{0,i}) = 2/(2i-1) psi(L_{0,1}, G_{0,i})
///   f(G_{a,i}) = (psi(L_{0,0}, G_{a,i}) - i f(G_{a,i-1})) / a
LinearFunctional trivialize(const Algebra& algebra, const CocycleSpec& psi, const Window& w);

struct ResidualEntry {
  BasisVector x;
  BasisVector y;
  Scalar value;
};

struct ResidualSector {
  std::size_t checked = 0;
  std::vector<ResidualEntry> nonzero;
};

struct ResidualReport {
  ResidualSector ll;  // (L, L)
  ResidualSector lg;  // (L, G) and (G, L)
  ResidualSector gg;  // (G, G)
  bool passed() const { return ll.nonzero.empty() && lg.nonzero.empty() && gg.nonzero.empty(); }
};

/// phi(x,y) = psi(x,y) - f([x,y]) for every ordered pair of window basis
/// vectors. Throws OutOfWindow if f is undefined on a bracket support.
ResidualReport residual_check(const Algebra& algebra, const CocycleSpec& psi, const LinearFunctional& f,
                              const Window& w);

/// Central cocycle of the centerless super-Virasoro algebra as a table:
/// psi(L_a, L_b) = d_{a+b,0} (a^3 - a)/12, psi(L, G) = 0,
/// psi(G_m, G_n) = +-d_{m+n,0} (m^2 - 1/4)/3 (sign from the convention).
CocycleSpec svir_central_cocycle(const Algebra& algebra, const Window& w,
                                 SVirConvention convention = SVirConvention::AsPublished);

/// Tabulates any cocycle on the window pairs.
CocycleSpec materialize(const Algebra& algebra, const CocycleSpec& psi, const Window& w);

}  // namespace supervir
