#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkit {

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    if (i >= n) throw DimensionError("unit vector index out of range");
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
    if (y.size() != x.size()) throw DimensionError("axpy length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

void axpy(Vector& y, const Rational& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (const auto& [i, v] : x) {
        if (i >= y.size()) throw DimensionError("axpy index out of range");
        y[i].add_product(a, v);
    }
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = s * v[i];
    return r;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
    return s;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
    os << ')';
    return os.str();
}

SparseVec to_sparse(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vector to_dense(const SparseVec& v, std::size_t n) {
    Vector d(n);
    for (const auto& [i, x] : v) {
        if (i >= n) throw DimensionError("sparse index out of range");
        d[i] = x;
    }
    return d;
}

// ---- Matrix ----

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero()) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionError("ragged matrix columns");
        for (std::size_t r = 0; r < rows; ++r)
            if (!cols[c][r].is_zero()) m.set(r, c, cols[c][r]);
    }
    return m;
}

void Matrix::check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw DimensionError("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

std::size_t Matrix::nnz() const {
    if (!dense_) return sparse_data_.size();
    return static_cast<std::size_t>(std::count_if(dense_data_.begin(), dense_data_.end(),
                                                  [](const Rational& x) { return !x.is_zero(); }));
}

Rational Matrix::get(std::size_t r, std::size_t c) const {
    check(r, c);
    if (dense_) return dense_data_[r * cols_ + c];
    auto it = sparse_data_.find({r, c});
    return it == sparse_data_.end() ? Rational() : it->second;
}

void Matrix::maybe_densify() {
    if (dense_ || rows_ * cols_ == 0) return;
    if (sparse_data_.size() * 4 <= rows_ * cols_) return;
    dense_data_.assign(rows_ * cols_, Rational());
    for (auto& [rc, v] : sparse_data_) dense_data_[rc.first * cols_ + rc.second] = std::move(v);
    sparse_data_.clear();
    dense_ = true;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
    check(r, c);
    if (dense_) {
        dense_data_[r * cols_ + c] = v;
        return;
    }
    if (v.is_zero()) {
        sparse_data_.erase({r, c});
        return;
    }
    sparse_data_[{r, c}] = v;
    maybe_densify();
}

void Matrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
    if (v.is_zero()) return;
    set(r, c, get(r, c) + v);
}

Vector Matrix::row(std::size_t r) const {
    check(r, 0);
    Vector v(cols_);
    if (dense_) {
        std::copy(dense_data_.begin() + r * cols_, dense_data_.begin() + (r + 1) * cols_, v.begin());
    } else {
        for (auto it = sparse_data_.lower_bound({r, 0}); it != sparse_data_.end() && it->first.first == r; ++it)
            v[it->first.second] = it->second;
    }
    return v;
}

SparseVec Matrix::sparse_row(std::size_t r) const {
    if (dense_) return to_sparse(row(r));
    check(r, 0);
    SparseVec s;
    for (auto it = sparse_data_.lower_bound({r, 0}); it != sparse_data_.end() && it->first.first == r; ++it)
        s.emplace_back(it->first.second, it->second);
    return s;
}

std::vector<SparseVec> Matrix::sparse_rows() const {
    std::vector<SparseVec> out(rows_);
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) { out[r].emplace_back(c, v); });
    return out;
}

Vector Matrix::column(std::size_t c) const {
    check(0, c);
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = get(r, c);
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    Vector y(rows_);
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) {
        if (!x[c].is_zero()) y[r].add_product(v, x[c]);
    });
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) { t.set(c, r, v); });
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
    std::vector<SparseVec> orows = o.sparse_rows();
    std::vector<Vector> acc(rows_, Vector(o.cols_));
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) { axpy(acc[r], v, orows[c]); });
    return from_rows(acc, o.cols_);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
    Matrix s = *this;
    o.for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) { s.add_to(r, c, v); });
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m(rows_, cols_);
    if (s.is_zero()) return m;
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) { m.set(r, c, s * v); });
    return m;
}

bool Matrix::is_zero() const { return nnz() == 0; }

Vector Matrix::flatten() const {
    Vector v(rows_ * cols_);
    for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& x) { v[r * cols_ + c] = x; });
    return v;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionError("unflatten size mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) m.set(i / cols, i % cols, v[i]);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.nnz() != b.nnz()) return false;
    bool same = true;
    a.for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) {
        if (same && b.get(r, c) != v) same = false;
    });
    return same;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    auto brows = b.sparse_rows();
    a.for_each_nonzero([&](std::size_t r, std::size_t c, const Rational& v) {
        for (std::size_t br = 0; br < brows.size(); ++br)
            for (const auto& [bc, w] : brows[br]) k.set(r * b.rows() + br, c * b.cols() + bc, v * w);
    });
    return k;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RowEchelon ech(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        SparseVec row = m.sparse_row(r);
        row.emplace_back(n + r, Rational(1));
        ech.insert(row);
    }
    auto piv = ech.pivots();
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (const auto& [p, row] : ech.pivot_rows())
        for (const auto& [c, v] : row)
            if (c >= n) inv.set(p, c - n, v);
    return inv;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) os << to_string(m.row(r)) << '\n';
    return os.str();
}

// ---- Tensor3 ----

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
    : d1_(d1), d2_(d2), d3_(d3), slices_(d1 * d2) {}

void Tensor3::check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= d1_ || j >= d2_ || k >= d3_)
        throw DimensionError("tensor index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                             std::to_string(k) + ") out of range");
}

const SparseVec& Tensor3::at(std::size_t i, std::size_t j) const {
    if (i >= d1_ || j >= d2_) throw DimensionError("tensor slice index out of range");
    return slices_[i * d2_ + j];
}

Rational Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    const auto& s = slices_[i * d2_ + j];
    auto it = std::lower_bound(s.begin(), s.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
    return (it != s.end() && it->first == k) ? it->second : Rational();
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    check(i, j, k);
    auto& s = slices_[i * d2_ + j];
    auto it = std::lower_bound(s.begin(), s.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != s.end() && it->first == k) {
        if (v.is_zero())
            s.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        s.insert(it, {k, v});
    }
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (v.is_zero()) return;
    set(i, j, k, get(i, j, k) + v);
}

void Tensor3::set_slice(std::size_t i, std::size_t j, const Vector& v) {
    if (v.size() != d3_) throw DimensionError("tensor slice length mismatch");
    if (i >= d1_ || j >= d2_) throw DimensionError("tensor slice index out of range");
    slices_[i * d2_ + j] = to_sparse(v);
}

Vector Tensor3::slice(std::size_t i, std::size_t j) const { return to_dense(at(i, j), d3_); }

std::vector<Tensor3::Entry> Tensor3::entries() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < d1_; ++i)
        for (std::size_t j = 0; j < d2_; ++j)
            for (const auto& [k, v] : slices_[i * d2_ + j]) out.push_back({i, j, k, v});
    return out;
}

std::size_t Tensor3::nnz() const {
    std::size_t n = 0;
    for (const auto& s : slices_) n += s.size();
    return n;
}

// ---- RowEchelon ----

namespace {

// a - f*b for sorted sparse vectors
SparseVec sub_scaled(const SparseVec& a, const Rational& f, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            Rational v = a[i].second - f * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Rational* find_entry(const SparseVec& v, std::size_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::size_t key) { return e.first < key; });
    return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

}  // namespace

SparseVec RowEchelon::reduce(const SparseVec& v) const {
    // Pivot rows are zero on every other pivot column, so the original
    // coefficients of v on pivot columns are exactly the multipliers.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, x] : v)
        if (rows_.count(c)) hits.emplace_back(c, x);
    if (hits.empty()) return v;
    Vector acc(cols_);
    for (const auto& [c, x] : v) {
        if (c >= cols_) throw DimensionError("row index beyond echelon width");
        acc[c] = x;
    }
    for (const auto& [c, x] : hits) axpy(acc, -x, rows_.at(c));
    return to_sparse(acc);
}

bool RowEchelon::insert(const SparseVec& row) {
    SparseVec r = reduce(row);
    if (r.empty()) return false;
    Rational lead = r.front().second;
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        for (auto& e : r) e.second *= inv;
    }
    const std::size_t p = r.front().first;
    for (auto& [q, other] : rows_) {
        if (const Rational* f = find_entry(other, p)) {
            Rational factor = *f;
            other = sub_scaled(other, factor, r);
        }
    }
    rows_.emplace(p, std::move(r));
    return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [c, _] : rows_) p.push_back(c);
    return p;
}

std::vector<SparseVec> RowEchelon::rows() const {
    std::vector<SparseVec> out;
    for (const auto& [_, r] : rows_) out.push_back(r);
    return out;
}

// ---- solvers ----

std::optional<Vector> solve_sparse(const std::vector<SparseVec>& rows, const Vector& rhs, std::size_t n) {
    if (rows.size() != rhs.size()) throw DimensionError("solve: row count differs from right-hand side length");
    RowEchelon ech(n + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVec r = rows[i];
        if (!r.empty() && r.back().first >= n) throw DimensionError("solve: column index out of range");
        if (!rhs[i].is_zero()) r.emplace_back(n, rhs[i]);
        ech.insert(r);
    }
    Vector x(n);
    for (const auto& [p, row] : ech.pivot_rows()) {
        if (p == n) return std::nullopt;
        if (const Rational* b = find_entry(row, n)) x[p] = *b;
    }
    return x;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw DimensionError("solve_linear: A has " + std::to_string(a.rows()) +
                                                   " rows but b has " + std::to_string(b.size()) + " entries");
    return solve_sparse(a.sparse_rows(), b, a.cols());
}

std::vector<Vector> kernel_basis_sparse(const std::vector<SparseVec>& rows, std::size_t n) {
    RowEchelon ech(n);
    for (const auto& r : rows) ech.insert(r);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ech.pivots()) is_pivot[p] = true;
    RowEchelon kernel(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        for (const auto& [p, row] : ech.pivot_rows())
            if (const Rational* x = find_entry(row, f)) v.emplace_back(p, -*x);
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        kernel.insert(v);
    }
    std::vector<Vector> out;
    for (const auto& r : kernel.rows()) out.push_back(to_dense(r, n));
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& a) { return kernel_basis_sparse(a.sparse_rows(), a.cols()); }

std::size_t rank(const Matrix& a) {
    RowEchelon ech(a.cols());
    for (const auto& r : a.sparse_rows()) ech.insert(r);
    return ech.rank();
}

std::size_t rank(const std::vector<Vector>& vectors, std::size_t n) {
    RowEchelon ech(n);
    for (const auto& v : vectors) {
        if (v.size() != n) throw DimensionError("rank: vector length mismatch");
        ech.insert(v);
    }
    return ech.rank();
}

std::vector<SpanResult> span_contains_all(const std::vector<Vector>& vectors, const std::vector<Vector>& targets) {
    std::size_t n = 0;
    if (!vectors.empty())
        n = vectors.front().size();
    else if (!targets.empty())
        n = targets.front().size();
    for (const auto& v : vectors)
        if (v.size() != n) throw DimensionError("span_contains: vector length mismatch");
    for (const auto& t : targets)
        if (t.size() != n) throw DimensionError("span_contains: target length mismatch");
    const std::size_t k = vectors.size();
    // Rows are coordinates; columns are the spanning vectors then the targets.
    RowEchelon ech(k + targets.size());
    for (std::size_t r = 0; r < n; ++r) {
        SparseVec row;
        for (std::size_t c = 0; c < k; ++c)
            if (!vectors[c][r].is_zero()) row.emplace_back(c, vectors[c][r]);
        for (std::size_t t = 0; t < targets.size(); ++t)
            if (!targets[t][r].is_zero()) row.emplace_back(k + t, targets[t][r]);
        ech.insert(row);
    }
    std::vector<SpanResult> out(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        bool ok = true;
        Vector coeffs(k);
        for (const auto& [p, row] : ech.pivot_rows()) {
            const Rational* x = find_entry(row, k + t);
            if (p >= k) {
                if (x) ok = false;
            } else if (x) {
                coeffs[p] = *x;
            }
        }
        if (ok) out[t] = {true, std::move(coeffs)};
    }
    return out;
}

SpanResult span_contains(const std::vector<Vector>& vectors, const Vector& target) {
    return span_contains_all(vectors, {target}).front();
}

// ---- Subspace ----

Subspace::Subspace(const std::vector<Vector>& spanning, std::size_t ambient) : ambient_(ambient) {
    RowEchelon ech(ambient);
    for (const auto& v : spanning) {
        if (v.size() != ambient) throw DimensionError("subspace: vector length mismatch");
        ech.insert(v);
    }
    for (const auto& [p, row] : ech.pivot_rows()) {
        pivots_.push_back(p);
        basis_.push_back(to_dense(row, ambient));
    }
}

std::optional<Vector> Subspace::coords(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("subspace: coordinate length mismatch");
    Vector c(basis_.size());
    Vector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        c[i] = v[pivots_[i]];
        axpy(rest, -c[i], basis_[i]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
}

bool Subspace::contains(const Vector& v) const { return coords(v).has_value(); }

Vector Subspace::from_coords(const Vector& c) const {
    if (c.size() != basis_.size()) throw DimensionError("subspace: coefficient length mismatch");
    Vector v(ambient_);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(v, c[i], basis_[i]);
    return v;
}

}  // namespace hopfkit
