#include "corings/linalg.hpp"

#include <stdexcept>

namespace corings {

namespace {

mpq_class mod_reduce(const Field& f, const mpq_class& v) {
  if (f.is_rationals()) return v;
  mpz_class p(static_cast<unsigned long>(f.p));
  mpz_class num = v.get_num(), den = v.get_den();
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return mpq_class(r);
}

mpq_class field_inv(const Field& f, const mpq_class& v) {
  if (v == 0) throw std::domain_error("division by zero");
  if (f.is_rationals()) return 1 / v;
  mpz_class p(static_cast<unsigned long>(f.p)), inv;
  mpz_class num = v.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible residue");
  return mpq_class(inv);
}

void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("field mismatch");
}

}  // namespace

LinMap::LinMap(Field f, int rows, int cols)
    : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, mpq_class(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

LinMap LinMap::identity(Field f, int n) {
  LinMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.a_[m.idx(i, i)] = 1;
  return m;
}

LinMap LinMap::basis_column(Field f, int n, int i) {
  LinMap m(f, n, 1);
  m.a_[i] = 1;
  return m;
}

LinMap LinMap::row_vector(Field f, const Vec& v) {
  LinMap m(f, 1, static_cast<int>(v.size()));
  for (size_t j = 0; j < v.size(); ++j) m.set(0, static_cast<int>(j), v[j]);
  return m;
}

LinMap LinMap::column_vector(Field f, const Vec& v) {
  LinMap m(f, static_cast<int>(v.size()), 1);
  for (size_t j = 0; j < v.size(); ++j) m.set(static_cast<int>(j), 0, v[j]);
  return m;
}

LinMap LinMap::from_rows(Field f, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  LinMap m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

mpq_class LinMap::reduce(const mpq_class& v) const { return mod_reduce(field_, v); }

void LinMap::set(int r, int c, const mpq_class& v) { a_[idx(r, c)] = reduce(v); }

LinMap LinMap::operator*(const LinMap& g) const {
  check_same_field(field_, g.field_);
  if (cols_ != g.rows_) throw std::invalid_argument("composition dimension mismatch");
  LinMap out(field_, rows_, g.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& x = a_[idx(i, k)];
      if (x == 0) continue;
      for (int j = 0; j < g.cols_; ++j) {
        const mpq_class& y = g.a_[g.idx(k, j)];
        if (y == 0) continue;
        out.a_[out.idx(i, j)] += x * y;
      }
    }
  if (!field_.is_rationals())
    for (auto& v : out.a_) v = out.reduce(v);
  return out;
}

LinMap LinMap::operator+(const LinMap& g) const {
  check_same_field(field_, g.field_);
  if (rows_ != g.rows_ || cols_ != g.cols_)
    throw std::invalid_argument("sum dimension mismatch");
  LinMap out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = reduce(a_[i] + g.a_[i]);
  return out;
}

LinMap LinMap::operator-(const LinMap& g) const { return *this + (-g); }

LinMap LinMap::operator-() const {
  LinMap out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = reduce(-a_[i]);
  return out;
}

LinMap LinMap::scaled(const mpq_class& c) const {
  LinMap out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = reduce(a_[i] * c);
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.a_[out.idx(j, i)] = a_[idx(i, j)];
  return out;
}

bool LinMap::operator==(const LinMap& g) const {
  return rows_ == g.rows_ && cols_ == g.cols_ && field_ == g.field_ && a_ == g.a_;
}

bool LinMap::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

Vec LinMap::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply dimension mismatch");
  Vec out(rows_, mpq_class(0));
  for (int i = 0; i < rows_; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < cols_; ++j) s += a_[idx(i, j)] * v[j];
    out[i] = reduce(s);
  }
  return out;
}

Vec LinMap::row(int r) const {
  Vec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = a_[idx(r, j)];
  return out;
}

Vec LinMap::col(int c) const {
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = a_[idx(i, c)];
  return out;
}

LinMap LinMap::column(int c) const { return column_vector(field_, col(c)); }

LinMap kron(const LinMap& f, const LinMap& g) {
  check_same_field(f.field(), g.field());
  LinMap out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (int i1 = 0; i1 < f.rows(); ++i1)
    for (int j1 = 0; j1 < f.cols(); ++j1) {
      const mpq_class& x = f.at(i1, j1);
      if (x == 0) continue;
      for (int i2 = 0; i2 < g.rows(); ++i2)
        for (int j2 = 0; j2 < g.cols(); ++j2) {
          const mpq_class& y = g.at(i2, j2);
          if (y == 0) continue;
          out.set(i1 * g.rows() + i2, j1 * g.cols() + j2, x * y);
        }
    }
  return out;
}

LinMap swap_map(Field f, int d1, int d2) {
  LinMap s(f, d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) s.set(j * d1 + i, i * d2 + j, 1);
  return s;
}

LinMap hstack(const LinMap& a, const LinMap& b) {
  check_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  LinMap out(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

LinMap vstack(const LinMap& a, const LinMap& b) {
  check_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  LinMap out(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  return out;
}

namespace {

// Forward elimination to row echelon form. Over Q each row is first scaled
// to integer entries, then one-step fraction-free (Bareiss) elimination keeps
// all intermediates integral. Over F_p ordinary modular elimination is used.
// Returns the echelon matrix und pivot columns; rows below rank are zero.
struct ForwardResult {
  std::vector<Vec> rows;
  std::vector<int> pivots;
  int swaps = 0;
  mpq_class row_scale_product = 1;  // product of factors applied to rows (Q only)
};

ForwardResult forward_eliminate(const LinMap& m, bool fraction_free) {
  const Field f = m.field();
  const int nr = m.rows(), nc = m.cols();
  ForwardResult res;
  res.rows.resize(nr);
  for (int i = 0; i < nr; ++i) res.rows[i] = m.row(i);

  if (fraction_free && f.is_rationals()) {
    for (int i = 0; i < nr; ++i) {
      mpz_class l(1);
      for (int j = 0; j < nc; ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), res.rows[i][j].get_den().get_mpz_t());
      if (l != 1) {
        for (int j = 0; j < nc; ++j) res.rows[i][j] *= l;
        res.row_scale_product *= l;
      }
    }
  }

  mpq_class prev = 1;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (res.rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(res.rows[piv], res.rows[r]);
      ++res.swaps;
    }
    const Vec& prow = res.rows[r];
    for (int i = r + 1; i < nr; ++i) {
      Vec& row = res.rows[i];
      if (row[c] == 0) continue;
      if (fraction_free && f.is_rationals()) {
        mpq_class mic = row[c];
        for (int j = c + 1; j < nc; ++j) {
          mpq_class t = prow[c] * row[j] - mic * prow[j];
          // exact integer division by the previous pivot
          mpz_class q;
          mpz_divexact(q.get_mpz_t(), t.get_num().get_mpz_t(), prev.get_num().get_mpz_t());
          row[j] = mpq_class(q);
        }
        row[c] = 0;
      } else {
        mpq_class factor = mod_reduce(f, row[c] * field_inv(f, prow[c]));
        for (int j = c; j < nc; ++j)
          row[j] = mod_reduce(f, row[j] - factor * prow[j]);
      }
    }
    prev = prow[c];
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

Echelon backsubstitute(ForwardResult fr, const Field& f, int nc) {
  const int rank = static_cast<int>(fr.pivots.size());
  // normalize pivots to 1
  for (int i = 0; i < rank; ++i) {
    mpq_class inv = field_inv(f, fr.rows[i][fr.pivots[i]]);
    for (int j = 0; j < nc; ++j) fr.rows[i][j] = mod_reduce(f, fr.rows[i][j] * inv);
  }
  // eliminate above pivots
  for (int i = rank - 1; i >= 0; --i) {
    int c = fr.pivots[i];
    for (int u = 0; u < i; ++u) {
      mpq_class factor = fr.rows[u][c];
      if (factor == 0) continue;
      for (int j = c; j < nc; ++j)
        fr.rows[u][j] = mod_reduce(f, fr.rows[u][j] - factor * fr.rows[i][j]);
    }
  }
  fr.rows.resize(rank);
  Echelon e;
  e.mat = LinMap::from_rows(f, fr.rows);
  if (rank == 0) e.mat = LinMap(f, 0, nc);
  e.pivots = std::move(fr.pivots);
  e.rank = rank;
  return e;
}

}  // namespace

Echelon rref(const LinMap& m) {
  return backsubstitute(forward_eliminate(m, true), m.field(), m.cols());
}

Echelon rref_naive(const LinMap& m) {
  return backsubstitute(forward_eliminate(m, false), m.field(), m.cols());
}

int rank_of(const LinMap& m) { return rref(m).rank; }

Scalar determinant(const LinMap& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square map");
  const Field f = m.field();
  const int n = m.rows();
  if (n == 0) return Scalar::one(f);
  ForwardResult fr = forward_eliminate(m, f.is_rationals());
  if (static_cast<int>(fr.pivots.size()) < n) return Scalar::zero(f);
  mpq_class det;
  if (f.is_rationals()) {
    // Bareiss: the last pivot is the determinant of the integer-scaled matrix
    det = fr.rows[n - 1][n - 1] / fr.row_scale_product;
  } else {
    det = 1;
    for (int i = 0; i < n; ++i) det = mod_reduce(f, det * fr.rows[i][i]);
  }
  if (fr.swaps % 2 == 1) det = -det;
  return Scalar(f, det);
}

bool is_invertible(const LinMap& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

LinMap inverse(const LinMap& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square map");
  auto x = solve_matrix(m, LinMap::identity(m.field(), m.rows()));
  if (!x || rank_of(m) != m.rows()) throw std::domain_error("map is not invertible");
  return *x;
}

Subspace::Subspace(Field f, int ambient)
    : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::full(Field f, int ambient) {
  Subspace s(f, ambient);
  s.basis_ = LinMap::identity(f, ambient);
  return s;
}

Subspace Subspace::span_rows(const LinMap& rows) {
  Subspace s(rows.field(), rows.cols());
  s.basis_ = rref(rows).mat;
  return s;
}

Subspace Subspace::kernel(const LinMap& f) {
  Echelon e = rref(f);
  const int nc = f.cols();
  std::vector<bool> is_pivot(nc, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (int j = 0; j < nc; ++j) {
    if (is_pivot[j]) continue;
    Vec v(nc, mpq_class(0));
    v[j] = 1;
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.mat.at(i, j);
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return Subspace(f.field(), nc);
  return span_rows(LinMap::from_rows(f.field(), gens));
}

Subspace Subspace::image(const LinMap& f) { return span_rows(f.transpose()); }

LinMap Subspace::constraints() const { return Subspace::kernel(basis_).basis(); }

bool Subspace::contains(const Vec& v) const {
  Vec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    // pivot column of row i is the first nonzero entry
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    mpq_class coef = r[p];
    if (coef == 0) continue;
    for (int j = 0; j < ambient_; ++j)
      r[j] = mod_reduce(field_, r[j] - coef * basis_.at(i, j));
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && field_ == other.field_ && basis_ == other.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  return span_rows(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  return Subspace::kernel(vstack(constraints(), other.constraints()));
}

QuotientSpace quotient(const Subspace& by) {
  const Field f = by.field();
  const int n = by.ambient();
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivots(by.dim(), -1);
  for (int i = 0; i < by.dim(); ++i)
    for (int j = 0; j < n; ++j)
      if (by.basis().at(i, j) != 0) {
        is_pivot[j] = true;
        pivots[i] = j;
        break;
      }
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  QuotientSpace q;
  q.dim = static_cast<int>(free_cols.size());
  // Reduce each basis vector modulo the subspace (RREF rows have 1 at their
  // pivot and 0 at other pivots, so one pass suffices), then read off the
  // free coordinates.
  q.projection = LinMap(f, q.dim, n);
  for (int e = 0; e < n; ++e) {
    Vec v(n, mpq_class(0));
    v[e] = 1;
    for (int i = 0; i < by.dim(); ++i) {
      mpq_class coef = v[pivots[i]];
      if (coef == 0) continue;
      for (int j = 0; j < n; ++j)
        v[j] = mod_reduce(f, v[j] - coef * by.basis().at(i, j));
    }
    for (int r = 0; r < q.dim; ++r) q.projection.set(r, e, v[free_cols[r]]);
  }
  q.section = LinMap(f, n, q.dim);
  for (int r = 0; r < q.dim; ++r) q.section.set(free_cols[r], r, 1);
  return q;
}

std::optional<LinMap> solve_matrix(const LinMap& f, const LinMap& targets) {
  if (f.rows() != targets.rows()) throw std::invalid_argument("solve dimension mismatch");
  Echelon e = rref(hstack(f, targets));
  const int nc = f.cols();
  // inconsistent iff some pivot lies in the target block
  for (int c : e.pivots)
    if (c >= nc) return std::nullopt;
  LinMap x(f.field(), nc, targets.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < targets.cols(); ++j) x.set(e.pivots[i], j, e.mat.at(i, nc + j));
  return x;
}

std::optional<Vec> solve(const LinMap& f, const Vec& target) {
  auto x = solve_matrix(f, LinMap::column_vector(f.field(), target));
  if (!x) return std::nullopt;
  return x->col(0);
}

AffineSet solve_affine(const LinMap& f, const Vec& target) {
  AffineSet out;
  auto x = solve(f, target);
  out.feasible = x.has_value();
  if (x) out.point = *x;
  out.directions = Subspace::kernel(f);
  return out;
}

std::optional<LinMap> express_in_subspace(const Subspace& s, const LinMap& vectors) {
  return solve_matrix(s.inclusion(), vectors);
}

}  // namespace corings
