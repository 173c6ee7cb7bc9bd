#ifndef CORINGS_ALGEBRA_HPP
#define CORINGS_ALGEBRA_HPP

#include <string>
#include <vector>

#include "corings/linalg.hpp"
#include "corings/report.hpp"

namespace corings {

/// A finite-dimensional unital associative k-algebra given by structure
/// constants: mult is a dim^2 -> dim matrix under the Kronecker pairing,
/// unit a dim x 1 column.
struct FinAlgebra {
  Field field;
  int dim = 0;
  LinMap mult;  // dim*dim -> dim
  LinMap unit;  // 1 -> dim

  /// Left multiplication by the basis-coordinate vector a.
  LinMap left_mult(const Vec& a) const;
  LinMap right_mult(const Vec& a) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit_vector() const { return unit.col(0); }

  bool operator==(const FinAlgebra&) const = default;
};

FinAlgebra ground_field_algebra(Field f);
/// Group algebra kG from a multiplication table: table[i][j] = index of g_i g_j.
FinAlgebra group_algebra(Field f, const std::vector<std::vector<int>>& table);
/// Upper triangular n x n matrices; basis E_{ij} (i <= j) ordered row-major.
FinAlgebra upper_triangular_algebra(Field f, int n);
/// Monogenic algebra k[t]/(t^d - c_{d-1} t^{d-1} - ... - c_0), basis 1, t, ..., t^{d-1}.
FinAlgebra monogenic_algebra(Field f, const Vec& reduction_coeffs);
FinAlgebra opposite_algebra(const FinAlgebra& a);
/// Algebra structure on a hom-space basis closed under composition-style
/// products: product of basis elements i, j expressed in the basis.
FinAlgebra algebra_from_products(Field f, int dim,
                                 const std::vector<std::vector<Vec>>& products,
                                 const Vec& unit);

/// Axiom report: associativity and the two-sided unit law, with a witness
/// basis triple (i,j,k) on failure.
Report check_algebra(const FinAlgebra& a);

/// Separability of the algebra: existence of e in A (x) A with
/// mult(e) = 1 and (a (x) 1)e = e(1 (x) a) for all a. Over the perfect
/// fields used here this decides semisimplicity.
bool is_separable_algebra(const FinAlgebra& a);

/// A bimodule over (left_alg, right_alg) with both actions as matrices.
struct Bimodule {
  FinAlgebra left_alg;
  FinAlgebra right_alg;
  int dim = 0;
  LinMap left_action;   // left_alg.dim * dim -> dim
  LinMap right_action;  // dim * right_alg.dim -> dim

  LinMap act_left(const Vec& a) const;   // dim -> dim
  LinMap act_right(const Vec& b) const;  // dim -> dim
  bool operator==(const Bimodule&) const = default;
};

/// A as the regular (A, A)-bimodule.
Bimodule regular_bimodule(const FinAlgebra& a);
/// A one-sided right A-module as a (k, A)-bimodule.
Bimodule right_module(const FinAlgebra& a, int dim, const LinMap& right_action);
/// A one-sided left A-module as an (A, k)-bimodule.
Bimodule left_module(const FinAlgebra& a, int dim, const LinMap& left_action);
/// B as an (A, B)-bimodule through an algebra map rho: A -> B (and mirrored).
Bimodule induced_left_by_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho);
Bimodule induced_right_by_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho);
/// View an (A, B)-bimodule over (A0, B0) along algebra maps into A, B.
Bimodule restrict_bimodule(const Bimodule& m, const FinAlgebra& a0, const LinMap& left_map,
                           const FinAlgebra& b0, const LinMap& right_map);

Report check_bimodule(const Bimodule& m);

/// Is rho: A -> B a unital multiplicative map (matrix identities)?
Report check_algebra_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho);

}  // namespace corings

#endif
