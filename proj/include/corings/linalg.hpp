#ifndef CORINGS_LINALG_HPP
#define CORINGS_LINALG_HPP

#include <optional>
#include <vector>

#include "corings/field.hpp"

namespace corings {

using Vec = std::vector<mpq_class>;

/// A k-linear map stored as a dense rows x cols matrix acting on column
/// vectors. Entries live in the field carried by the map; F_p entries are
/// kept as canonical residues.
class LinMap {
 public:
  LinMap() = default;
  LinMap(Field f, int rows, int cols);

  static LinMap identity(Field f, int n);
  static LinMap zero(Field f, int rows, int cols) { return LinMap(f, rows, cols); }
  static LinMap basis_column(Field f, int n, int i);
  static LinMap row_vector(Field f, const Vec& v);
  static LinMap column_vector(Field f, const Vec& v);
  static LinMap from_rows(Field f, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const mpq_class& at(int r, int c) const { return a_[idx(r, c)]; }
  void set(int r, int c, const mpq_class& v);

  LinMap operator*(const LinMap& g) const;  // composition: this after g
  LinMap operator+(const LinMap& g) const;
  LinMap operator-(const LinMap& g) const;
  LinMap operator-() const;
  LinMap scaled(const mpq_class& c) const;
  LinMap transpose() const;
  bool operator==(const LinMap& g) const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;
  Vec row(int r) const;
  Vec col(int c) const;
  LinMap column(int c) const;

 private:
  int rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<mpq_class> a_;

  int idx(int r, int c) const { return r * cols_ + c; }
  mpq_class reduce(const mpq_class& v) const;
  friend LinMap kron(const LinMap&, const LinMap&);
};

/// Kronecker product under the row-major pairing e_i (x) e_j -> i*dim2 + j,
/// so that kron(f, g)(v (x) w) = f(v) (x) g(w).
LinMap kron(const LinMap& f, const LinMap& g);
/// The flip V1 (x) V2 -> V2 (x) V1 in Kronecker coordinates.
LinMap swap_map(Field f, int d1, int d2);
LinMap hstack(const LinMap& a, const LinMap& b);
LinMap vstack(const LinMap& a, const LinMap& b);

struct Echelon {
  LinMap mat;               // reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

/// Canonical reduced row-echelon form. Over Q the forward pass is
/// fraction-free (Bareiss), so intermediate values stay integral for
/// integral input.
Echelon rref(const LinMap& m);
/// Same canonical result via plain Gauss-Jordan; kept as an independent
/// elimination strategy for cross-checking.
Echelon rref_naive(const LinMap& m);

int rank_of(const LinMap& m);
Scalar determinant(const LinMap& m);
bool is_invertible(const LinMap& m);
LinMap inverse(const LinMap& m);

/// A subspace of k^ambient in canonical form: basis rows in RREF. Two
/// Subspace values are equal iff they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, int ambient);  // zero subspace
  static Subspace full(Field f, int ambient);
  static Subspace span_rows(const LinMap& rows);
  static Subspace kernel(const LinMap& f);
  static Subspace image(const LinMap& f);  // column space

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Field& field() const { return field_; }
  const LinMap& basis() const { return basis_; }
  /// ambient x dim matrix whose columns are the basis vectors.
  LinMap inclusion() const { return basis_.transpose(); }
  /// Rows span the dot-orthogonal complement; v in S iff constraints()*v = 0.
  LinMap constraints() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  Field field_;
  int ambient_ = 0;
  LinMap basis_;  // dim x ambient, canonical RREF
};

struct QuotientSpace {
  int dim = 0;
  LinMap projection;  // ambient -> dim, kernel = the subspace
  LinMap section;     // dim -> ambient, projection * section = id
};
QuotientSpace quotient(const Subspace& by);

/// One solution of f(x) = target with the free variables (the non-pivot
/// coordinates, i.e. the lexicographically least choice) set to zero.
std::optional<Vec> solve(const LinMap& f, const Vec& target);
/// Columnwise solve of f * X = targets.
std::optional<LinMap> solve_matrix(const LinMap& f, const LinMap& targets);

struct AffineSet {
  bool feasible = false;
  Vec point;            // canonical particular solution
  Subspace directions;  // kernel of the map
};
AffineSet solve_affine(const LinMap& f, const Vec& target);

/// Coordinates of the given column vectors with respect to the subspace
/// basis: returns Y with inclusion() * Y = vectors, or nullopt if some
/// column lies outside the subspace.
std::optional<LinMap> express_in_subspace(const Subspace& s, const LinMap& vectors);

}  // namespace corings

#endif
