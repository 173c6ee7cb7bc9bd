#include "corings/algebra.hpp"

#include <stdexcept>

namespace corings {

namespace {

std::string diff_witness(const LinMap& lhs, const LinMap& rhs, const std::vector<int>& dims) {
  for (int c = 0; c < lhs.cols(); ++c) {
    if (lhs.col(c) != rhs.col(c)) {
      // decode the Kronecker column index into a basis multi-index
      std::string w = "basis tuple (";
      int rem = c;
      std::vector<int> parts(dims.size());
      for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        parts[i] = dims[i] == 0 ? 0 : rem % dims[i];
        rem = dims[i] == 0 ? 0 : rem / dims[i];
      }
      for (size_t i = 0; i < parts.size(); ++i)
        w += (i ? "," : "") + std::to_string(parts[i]);
      return w + ")";
    }
  }
  return "";
}

}  // namespace

LinMap FinAlgebra::left_mult(const Vec& a) const {
  return mult * kron(LinMap::column_vector(field, a), LinMap::identity(field, dim));
}

LinMap FinAlgebra::right_mult(const Vec& a) const {
  return mult * kron(LinMap::identity(field, dim), LinMap::column_vector(field, a));
}

Vec FinAlgebra::multiply(const Vec& a, const Vec& b) const {
  return left_mult(a).apply(b);
}

FinAlgebra ground_field_algebra(Field f) {
  FinAlgebra a;
  a.field = f;
  a.dim = 1;
  a.mult = LinMap::identity(f, 1);
  a.unit = LinMap::identity(f, 1);
  return a;
}

FinAlgebra group_algebra(Field f, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  FinAlgebra a;
  a.field = f;
  a.dim = n;
  a.mult = LinMap(f, n, n * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw std::invalid_argument("ragged multiplication table");
    for (int j = 0; j < n; ++j) {
      int k = table[i][j];
      if (k < 0 || k >= n) throw std::invalid_argument("table entry out of range");
      a.mult.set(k, i * n + j, 1);
    }
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) ok = false;
    if (ok) e = i;
  }
  if (e < 0) throw std::invalid_argument("table has no identity element");
  a.unit = LinMap::basis_column(f, n, e);
  return a;
}

FinAlgebra upper_triangular_algebra(Field f, int n) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) basis.emplace_back(i, j);
  const int d = static_cast<int>(basis.size());
  FinAlgebra a;
  a.field = f;
  a.dim = d;
  a.mult = LinMap(f, d, d * d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      auto [i, j] = basis[u];
      auto [k, l] = basis[v];
      if (j != k) continue;
      for (int w = 0; w < d; ++w)
        if (basis[w] == std::make_pair(i, l)) a.mult.set(w, u * d + v, 1);
    }
  a.unit = LinMap(f, d, 1);
  for (int w = 0; w < d; ++w)
    if (basis[w].first == basis[w].second) a.unit.set(w, 0, 1);
  return a;
}

FinAlgebra monogenic_algebra(Field f, const Vec& reduction_coeffs) {
  const int d = static_cast<int>(reduction_coeffs.size());
  if (d == 0) throw std::invalid_argument("degree must be positive");
  FinAlgebra a;
  a.field = f;
  a.dim = d;
  a.mult = LinMap(f, d, d * d);
  // t^i * t^j, reduced by t^d = sum_m c_m t^m
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec poly(2 * d, mpq_class(0));
      poly[i + j] = 1;
      for (int deg = 2 * d - 2; deg >= d; --deg) {
        mpq_class c = poly[deg];
        if (c == 0) continue;
        poly[deg] = 0;
        for (int m = 0; m < d; ++m) poly[deg - d + m] += c * reduction_coeffs[m];
      }
      for (int m = 0; m < d; ++m) a.mult.set(m, i * d + j, poly[m]);
    }
  a.unit = LinMap::basis_column(f, d, 0);
  return a;
}

FinAlgebra opposite_algebra(const FinAlgebra& a) {
  FinAlgebra op = a;
  op.mult = a.mult * swap_map(a.field, a.dim, a.dim);
  return op;
}

FinAlgebra algebra_from_products(Field f, int dim,
                                 const std::vector<std::vector<Vec>>& products,
                                 const Vec& unit) {
  FinAlgebra a;
  a.field = f;
  a.dim = dim;
  a.mult = LinMap(f, dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) a.mult.set(k, i * dim + j, products[i][j][k]);
  a.unit = LinMap::column_vector(f, unit);
  return a;
}

Report check_algebra(const FinAlgebra& a) {
  Report rep;
  const Field f = a.field;
  const int d = a.dim;
  LinMap id = LinMap::identity(f, d);
  LinMap lhs = a.mult * kron(a.mult, id);
  LinMap rhs = a.mult * kron(id, a.mult);
  rep.require(lhs == rhs, "associativity", diff_witness(lhs, rhs, {d, d, d}));
  LinMap lu = a.mult * kron(a.unit, id);
  rep.require(lu == id, "left-unit", diff_witness(lu, id, {d}));
  LinMap ru = a.mult * kron(id, a.unit);
  rep.require(ru == id, "right-unit", diff_witness(ru, id, {d}));
  return rep;
}

bool is_separable_algebra(const FinAlgebra& a) {
  const Field f = a.field;
  const int d = a.dim;
  LinMap id = LinMap::identity(f, d);
  // unknown e in A (x) A: mult(e) = 1 and (a_i (x) 1) e = e (1 (x) a_i)
  LinMap sys = a.mult;
  Vec target = a.unit_vector();
  for (int i = 0; i < d; ++i) {
    Vec ei(d, mpq_class(0));
    ei[i] = 1;
    LinMap li = a.left_mult(ei), ri = a.right_mult(ei);
    LinMap row = kron(li, id) - kron(id, ri);
    sys = vstack(sys, row);
    target.resize(target.size() + d * d, mpq_class(0));
  }
  return solve(sys, target).has_value();
}

LinMap Bimodule::act_left(const Vec& a) const {
  return left_action * kron(LinMap::column_vector(left_alg.field, a),
                            LinMap::identity(left_alg.field, dim));
}

LinMap Bimodule::act_right(const Vec& b) const {
  return right_action * kron(LinMap::identity(right_alg.field, dim),
                             LinMap::column_vector(right_alg.field, b));
}

Bimodule regular_bimodule(const FinAlgebra& a) {
  return Bimodule{a, a, a.dim, a.mult, a.mult};
}

Bimodule right_module(const FinAlgebra& a, int dim, const LinMap& right_action) {
  FinAlgebra k = ground_field_algebra(a.field);
  return Bimodule{k, a, dim, LinMap::identity(a.field, dim), right_action};
}

Bimodule left_module(const FinAlgebra& a, int dim, const LinMap& left_action) {
  FinAlgebra k = ground_field_algebra(a.field);
  return Bimodule{a, k, dim, left_action, LinMap::identity(a.field, dim)};
}

Bimodule induced_left_by_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho) {
  LinMap id = LinMap::identity(b.field, b.dim);
  return Bimodule{a, b, b.dim, b.mult * kron(rho, id), b.mult};
}

Bimodule induced_right_by_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho) {
  LinMap id = LinMap::identity(b.field, b.dim);
  return Bimodule{b, a, b.dim, b.mult, b.mult * kron(id, rho)};
}

Bimodule restrict_bimodule(const Bimodule& m, const FinAlgebra& a0, const LinMap& left_map,
                           const FinAlgebra& b0, const LinMap& right_map) {
  LinMap id = LinMap::identity(m.left_alg.field, m.dim);
  return Bimodule{a0, b0, m.dim, m.left_action * kron(left_map, id),
                  m.right_action * kron(id, right_map)};
}

Report check_bimodule(const Bimodule& m) {
  Report rep;
  const Field f = m.left_alg.field;
  const int d = m.dim, da = m.left_alg.dim, db = m.right_alg.dim;
  LinMap id = LinMap::identity(f, d);
  LinMap ida = LinMap::identity(f, da);
  LinMap idb = LinMap::identity(f, db);

  LinMap l1 = m.left_action * kron(ida, m.left_action);
  LinMap l2 = m.left_action * kron(m.left_alg.mult, id);
  rep.require(l1 == l2, "left-associativity", diff_witness(l1, l2, {da, da, d}));
  LinMap lu = m.left_action * kron(m.left_alg.unit, id);
  rep.require(lu == id, "left-unitality", diff_witness(lu, id, {d}));

  LinMap r1 = m.right_action * kron(m.right_action, idb);
  LinMap r2 = m.right_action * kron(id, m.right_alg.mult);
  rep.require(r1 == r2, "right-associativity", diff_witness(r1, r2, {d, db, db}));
  LinMap ru = m.right_action * kron(id, m.right_alg.unit);
  rep.require(ru == id, "right-unitality", diff_witness(ru, id, {d}));

  LinMap c1 = m.right_action * kron(m.left_action, idb);
  LinMap c2 = m.left_action * kron(ida, m.right_action);
  rep.require(c1 == c2, "action-commutation", diff_witness(c1, c2, {da, d, db}));
  return rep;
}

Report check_algebra_map(const FinAlgebra& a, const FinAlgebra& b, const LinMap& rho) {
  Report rep;
  if (rho.rows() != b.dim || rho.cols() != a.dim) {
    rep.add(CheckResult::fail("map-dimensions", "expected " + std::to_string(b.dim) + "x" +
                                                    std::to_string(a.dim)));
    return rep;
  }
  rep.require(rho * a.unit == b.unit, "unital", "");
  LinMap lhs = rho * a.mult;
  LinMap rhs = b.mult * kron(rho, rho);
  rep.require(lhs == rhs, "multiplicative", diff_witness(lhs, rhs, {a.dim, a.dim}));
  return rep;
}

}  // namespace corings
