#include "homlie/exactla.hpp"

#include <algorithm>
#include <cctype>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionError(what);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector sum: size mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector difference: size mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y) {
    require(x.size() == y.size(), "axpy: size mismatch");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += s * x[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "from_rows: row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require(cols[c].size() == rows, "from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    require(v.size() == cols_, "matrix-vector product: size mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return homlie::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "matrix product: size mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (sgn(o(k, c)) != 0) p(r, c) += a * o(k, c);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: size mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: size mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

Matrix Matrix::vstack(const Matrix& below) const {
    require(cols_ == below.cols_, "vstack: column mismatch");
    Matrix s(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return s;
}

Matrix Matrix::pow(unsigned k) const {
    require(rows_ == cols_, "matrix power: not square");
    Matrix p = identity(rows_);
    for (unsigned i = 0; i < k; ++i) p = p * *this;
    return p;
}

// ---------------------------------------------------------------- elimination

Echelon row_reduce(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix form(r, cols);
    for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), form.row(i).begin());
    return {std::move(form), std::move(pivots)};
}

Matrix rref(const Matrix& m) {
    Echelon e = row_reduce(m);
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < e.form.rows(); ++i)
        std::copy(e.form.row(i).begin(), e.form.row(i).end(), out.row(i).begin());
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
    return row_space(Matrix::from_rows(vectors, n));
}

Subspace Subspace::row_space(const Matrix& m) {
    Echelon e = row_reduce(m);
    Subspace s(m.cols());
    s.basis_ = std::move(e.form);
    s.pivots_ = std::move(e.pivots);
    return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    require(v.size() == ambient_, "contains: ambient mismatch");
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar f = r[pivots_[i]];
        if (sgn(f) != 0) axpy(-f, basis_.row(i), r);
    }
    return homlie::is_zero(r);
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
    require(v.size() == ambient_, "coordinates: ambient mismatch");
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Vector Subspace::combine(std::span<const Scalar> coeffs) const {
    require(coeffs.size() == dim(), "combine: coefficient count mismatch");
    Vector v(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) axpy(coeffs[i], basis_.row(i), v);
    return v;
}

Subspace kernel(const Matrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Matrix& f, const Subspace& w) {
    require(f.cols() == w.ambient_dim(), "image: ambient mismatch");
    std::vector<Vector> imgs;
    for (std::size_t i = 0; i < w.dim(); ++i) imgs.push_back(f.apply(w.basis().row(i)));
    return Subspace::span(f.rows(), imgs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), "sum: ambient mismatch");
    return Subspace::row_space(a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), "intersect: ambient mismatch");
    const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    // Columns are the basis vectors of a followed by those of b; a kernel vector
    // (x, y) gives a.x = b.(-y), an element of the intersection.
    Matrix sys(n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t r = 0; r < n; ++r) sys(r, i) = a.basis()(i, r);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t r = 0; r < n; ++r) sys(r, da + j) = b.basis()(j, r);
    Subspace k = kernel(sys);
    std::vector<Vector> gens;
    for (std::size_t t = 0; t < k.dim(); ++t) {
        auto row = k.basis().row(t);
        gens.push_back(a.combine(row.subspan(0, da)));
    }
    return Subspace::span(n, gens);
}

bool contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

bool subspace_leq(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), "leq: ambient mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis().row(i))) return false;
    return true;
}

Subspace preimage(const Matrix& f, const Subspace& w) {
    require(f.rows() == w.ambient_dim(), "preimage: codomain mismatch");
    QuotientSpace q(w);
    return kernel(q.projection() * f);
}

bool is_invariant(const Matrix& a, const Subspace& w) {
    require(a.rows() == a.cols() && a.cols() == w.ambient_dim(), "is_invariant: size mismatch");
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (!w.contains(a.apply(w.basis().row(i)))) return false;
    return true;
}

Subspace largest_invariant_subspace(const Matrix& a, const Subspace& c) {
    require(a.rows() == a.cols() && a.cols() == c.ambient_dim(), "largest_invariant_subspace: size mismatch");
    Subspace w = c;
    while (true) {
        Subspace next = subspace_intersect(w, preimage(a, w));
        if (next.dim() == w.dim()) return w;
        w = std::move(next);
    }
}

// ---------------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(Subspace killed) : killed_(std::move(killed)) {
    const auto& piv = killed_.pivots();
    std::size_t k = 0;
    for (std::size_t c = 0; c < killed_.ambient_dim(); ++c) {
        if (k < piv.size() && piv[k] == c) {
            ++k;
            continue;
        }
        reps_.push_back(c);
    }
}

Vector QuotientSpace::project(std::span<const Scalar> v) const {
    require(v.size() == ambient_dim(), "project: ambient mismatch");
    Vector r(v.begin(), v.end());
    const auto& piv = killed_.pivots();
    for (std::size_t i = 0; i < killed_.dim(); ++i) {
        Scalar f = r[piv[i]];
        if (sgn(f) != 0) axpy(-f, killed_.basis().row(i), r);
    }
    Vector q(dim());
    for (std::size_t k = 0; k < reps_.size(); ++k) q[k] = r[reps_[k]];
    return q;
}

Vector QuotientSpace::lift(std::span<const Scalar> q) const {
    require(q.size() == dim(), "lift: quotient dimension mismatch");
    Vector v(ambient_dim());
    for (std::size_t k = 0; k < reps_.size(); ++k) v[reps_[k]] = q[k];
    return v;
}

Matrix QuotientSpace::projection() const {
    Matrix p(dim(), ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
        Vector col = project(unit_vector(ambient_dim(), j));
        for (std::size_t i = 0; i < dim(); ++i) p(i, j) = col[i];
    }
    return p;
}

Matrix QuotientSpace::section() const {
    Matrix s(ambient_dim(), dim());
    for (std::size_t k = 0; k < reps_.size(); ++k) s(reps_[k], k) = 1;
    return s;
}

Matrix QuotientSpace::induced_map(const Matrix& f, const QuotientSpace& target) const {
    require(f.cols() == ambient_dim() && f.rows() == target.ambient_dim(), "induced_map: size mismatch");
    Matrix m(target.dim(), dim());
    for (std::size_t k = 0; k < reps_.size(); ++k) {
        Vector img = target.project(f.column(reps_[k]));
        for (std::size_t i = 0; i < img.size(); ++i) m(i, k) = img[i];
    }
    return m;
}

// ---------------------------------------------------------------- SpanBuilder

SpanBuilder::SpanBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

void SpanBuilder::reduce(Vector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar f = v[pivots_[i]];
        if (sgn(f) != 0) axpy(-f, rows_[i], v);
    }
}

bool SpanBuilder::add(Vector v) {
    require(v.size() == ambient_, "SpanBuilder::add: ambient mismatch");
    if (full()) return false;
    reduce(v);
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
    if (lead == v.end()) return false;
    const auto p = static_cast<std::size_t>(lead - v.begin());
    Scalar inv = 1 / v[p];
    for (auto& x : v)
        if (sgn(x) != 0) x *= inv;
    for (auto& row : rows_) {
        Scalar f = row[p];
        if (sgn(f) != 0) axpy(-f, v, row);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool SpanBuilder::contains(std::span<const Scalar> v) const {
    Vector r(v.begin(), v.end());
    reduce(r);
    return homlie::is_zero(r);
}

Subspace SpanBuilder::build() const { return Subspace::span(ambient_, rows_); }

}  // namespace homlie
