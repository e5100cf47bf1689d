#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "th2/field.hpp"

namespace th2 {

// Sparse exact matrix. Entries live in per-row ordered maps so that
// iteration order (row-major, columns ascending) is deterministic, which
// makes the first-nonzero pivot rule reproducible across runs.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, K zero) : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const K& zero() const { return zero_; }

    const K& get(int r, int c) const
    {
        auto it = data_[r].find(c);
        return it == data_[r].end() ? zero_ : it->second;
    }

    void set(int r, int c, const K& v)
    {
        if (is_zero(v))
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }

    void add(int r, int c, const K& v)
    {
        if (is_zero(v))
            return;
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            data_[r].emplace(c, v);
        } else {
            it->second = it->second + v;
            if (is_zero(it->second))
                data_[r].erase(it);
        }
    }

    const std::map<int, K>& row(int r) const { return data_[r]; }

    long long nnz() const
    {
        long long n = 0;
        for (const auto& r : data_)
            n += static_cast<long long>(r.size());
        return n;
    }

    bool is_zero_matrix() const
    {
        for (const auto& r : data_)
            if (!r.empty())
                return false;
        return true;
    }

    std::optional<std::pair<int, int>> first_nonzero() const
    {
        for (int r = 0; r < rows_; ++r)
            if (!data_[r].empty())
                return std::make_pair(r, data_[r].begin()->first);
        return std::nullopt;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (int i = 0; i < a.rows_; ++i)
            for (const auto& [k, av] : a.data_[i])
                for (const auto& [j, bv] : b.data_[k])
                    r.add(i, j, av * bv);
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix sum: shape mismatch");
        Matrix r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (const auto& [j, v] : b.data_[i])
                r.add(i, j, v);
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix diff: shape mismatch");
        Matrix r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (const auto& [j, v] : b.data_[i])
                r.add(i, j, -v);
        return r;
    }

    Matrix scaled(const K& c) const
    {
        Matrix r(rows_, cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i])
                r.set(i, j, c * v);
        return r;
    }

    std::vector<K> apply(const std::vector<K>& x) const
    {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("Matrix apply: shape mismatch");
        std::vector<K> y(rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i])
                y[i] = y[i] + v * x[j];
        return y;
    }

    static Matrix identity(int n, K zero, K one)
    {
        Matrix r(n, n, std::move(zero));
        for (int i = 0; i < n; ++i)
            r.set(i, i, one);
        return r;
    }

    static Matrix from_columns(int rows, const std::vector<std::vector<K>>& cols, K zero)
    {
        Matrix r(rows, static_cast<int>(cols.size()), std::move(zero));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (int i = 0; i < rows; ++i)
                r.set(i, j, cols[j][i]);
        return r;
    }

    std::vector<K> column(int j) const
    {
        std::vector<K> c(rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            c[i] = get(i, j);
        return c;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    K zero_{};
    std::vector<std::map<int, K>> data_;
};

// Row echelon form bookkeeping shared by rank / kernel / solve.
template <class K>
struct Echelon {
    Matrix<K> rref;                // reduced rows (original row order discarded)
    std::vector<int> pivot_cols;   // pivot column per reduced row
};

// Gaussian elimination with the first nonzero entry in row-major order as
// pivot. Exact over any of the field scalars above (not for dual numbers).
template <class K>
Echelon<K> echelon(const Matrix<K>& m)
{
    const K& zero = m.zero();
    // dense-ish row representation: map col->K per row, eliminated in place
    std::vector<std::map<int, K>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        rows[i] = m.row(i);

    Echelon<K> out;
    out.rref = Matrix<K>(0, m.cols(), zero);
    std::vector<std::map<int, K>> reduced;
    std::vector<int> pivots;

    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        auto& r = rows[i];
        // reduce against existing pivots
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            auto it = r.find(pivots[k]);
            if (it == r.end())
                continue;
            K c = it->second;
            r.erase(it);
            for (const auto& [j, v] : reduced[k]) {
                if (j == pivots[k])
                    continue;
                auto jt = r.find(j);
                if (jt == r.end()) {
                    K nv = zero - c * v;
                    if (!is_zero(nv))
                        r.emplace(j, nv);
                } else {
                    jt->second = jt->second - c * v;
                    if (is_zero(jt->second))
                        r.erase(jt);
                }
            }
        }
        if (r.empty())
            continue;
        // normalize on the first nonzero column
        int pc = r.begin()->first;
        K pv = r.begin()->second;
        std::map<int, K> nr;
        for (const auto& [j, v] : r)
            nr.emplace(j, v / pv);
        // back-substitute into previously reduced rows
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            auto it = reduced[k].find(pc);
            if (it == reduced[k].end())
                continue;
            K c = it->second;
            reduced[k].erase(it);
            for (const auto& [j, v] : nr) {
                if (j == pc)
                    continue;
                auto jt = reduced[k].find(j);
                if (jt == reduced[k].end()) {
                    K nv = zero - c * v;
                    if (!is_zero(nv))
                        reduced[k].emplace(j, nv);
                } else {
                    jt->second = jt->second - c * v;
                    if (is_zero(jt->second))
                        reduced[k].erase(jt);
                }
            }
        }
        reduced.push_back(std::move(nr));
        pivots.push_back(pc);
    }

    // sort rows by pivot column for a canonical result
    std::vector<std::size_t> order(reduced.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

    out.rref = Matrix<K>(static_cast<int>(reduced.size()), m.cols(), zero);
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.pivot_cols.push_back(pivots[order[k]]);
        for (const auto& [j, v] : reduced[order[k]])
            out.rref.set(static_cast<int>(k), j, v);
    }
    return out;
}

template <class K>
int rank(const Matrix<K>& m)
{
    return static_cast<int>(echelon(m).pivot_cols.size());
}

// A subspace of k^ambient given by a basis matrix whose columns are
// linearly independent.
template <class K>
struct Subspace {
    int ambient = 0;
    Matrix<K> basis;  // ambient x dim

    int dim() const { return basis.cols(); }
};

template <class K>
Subspace<K> kernel_basis(const Matrix<K>& m)
{
    const K& zero = m.zero();
    K one = one_like(zero);
    Echelon<K> e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;

    Subspace<K> out;
    out.ambient = m.cols();
    std::vector<std::vector<K>> cols;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        std::vector<K> v(m.cols(), zero);
        v[j] = one;
        for (int r = 0; r < e.rref.rows(); ++r) {
            const K& c = e.rref.get(r, j);
            if (!is_zero(c))
                v[e.pivot_cols[r]] = zero - c;
        }
        cols.push_back(std::move(v));
    }
    out.basis = Matrix<K>::from_columns(m.cols(), cols, zero);
    return out;
}

template <class K>
Subspace<K> image_basis(const Matrix<K>& m)
{
    // pivot columns of m itself form a basis of the column space
    const K& zero = m.zero();
    // transpose-free: echelon of m gives column pivots
    Echelon<K> e = echelon(m);
    Subspace<K> out;
    out.ambient = m.rows();
    std::vector<std::vector<K>> cols;
    for (int c : e.pivot_cols)
        cols.push_back(m.column(c));
    out.basis = Matrix<K>::from_columns(m.rows(), cols, zero);
    return out;
}

// Solve M x = b exactly; nullopt if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const K& zero = m.zero();
    Matrix<K> aug(m.rows(), m.cols() + 1, zero);
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i))
            aug.set(i, j, v);
        aug.set(i, m.cols(), b[i]);
    }
    Echelon<K> e = echelon(aug);
    std::vector<K> x(m.cols(), zero);
    for (int r = 0; r < e.rref.rows(); ++r) {
        if (e.pivot_cols[r] == m.cols())
            return std::nullopt;  // 0 = 1 row
        x[e.pivot_cols[r]] = e.rref.get(r, m.cols());
    }
    return x;
}

// Solve M X = B columnwise; nullopt if any column is inconsistent.
template <class K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K>& m, const Matrix<K>& b)
{
    if (b.rows() != m.rows())
        throw std::invalid_argument("solve_matrix: shape mismatch");
    Matrix<K> x(m.cols(), b.cols(), m.zero());
    for (int j = 0; j < b.cols(); ++j) {
        auto col = solve(m, b.column(j));
        if (!col)
            return std::nullopt;
        for (int i = 0; i < m.cols(); ++i)
            x.set(i, j, (*col)[i]);
    }
    return x;
}

// Express the action of M on V in the coordinates of W: the matrix R with
// M * V.basis = W.basis * R. Throws if M does not map V into W.
template <class K>
Matrix<K> restrict_map(const Matrix<K>& m, const Subspace<K>& v, const Subspace<K>& w)
{
    if (m.cols() != v.ambient || m.rows() != w.ambient)
        throw std::invalid_argument("restrict_map: ambient mismatch");
    Matrix<K> mv = m * v.basis;
    auto r = solve_matrix(w.basis, mv);
    if (!r)
        throw std::domain_error("restrict_map: image leaves the target subspace");
    return *r;
}

template <class K>
bool subspace_contains(const Subspace<K>& v, const std::vector<K>& x)
{
    return solve(v.basis, x).has_value();
}

template <class K>
bool subspaces_equal(const Subspace<K>& a, const Subspace<K>& b)
{
    if (a.ambient != b.ambient || a.dim() != b.dim())
        return false;
    for (int j = 0; j < a.basis.cols(); ++j)
        if (!subspace_contains(b, a.basis.column(j)))
            return false;
    return true;
}

// Intersection of two subspaces of the same ambient space.
template <class K>
Subspace<K> subspace_intersection(const Subspace<K>& a, const Subspace<K>& b)
{
    const K& zero = a.basis.zero();
    // kernel of [A | -B]
    Matrix<K> stacked(a.ambient, a.dim() + b.dim(), zero);
    for (int i = 0; i < a.ambient; ++i) {
        for (const auto& [j, v] : a.basis.row(i))
            stacked.set(i, j, v);
        for (const auto& [j, v] : b.basis.row(i))
            stacked.set(i, a.dim() + j, zero - v);
    }
    Subspace<K> ker = kernel_basis(stacked);
    std::vector<std::vector<K>> cols;
    for (int j = 0; j < ker.dim(); ++j) {
        std::vector<K> lc(a.ambient, zero);
        auto kc = ker.basis.column(j);
        for (int t = 0; t < a.dim(); ++t)
            for (int i = 0; i < a.ambient; ++i)
                lc[i] = lc[i] + a.basis.get(i, t) * kc[t];
        cols.push_back(std::move(lc));
    }
    Matrix<K> cand = Matrix<K>::from_columns(a.ambient, cols, zero);
    Subspace<K> out;
    out.ambient = a.ambient;
    out.basis = image_basis(cand).basis;
    return out;
}

// Joint kernel of a list of matrices with a common column count.
template <class K>
Subspace<K> joint_kernel(const std::vector<Matrix<K>>& ms, int ambient, const K& zero)
{
    int total = 0;
    for (const auto& m : ms)
        total += m.rows();
    Matrix<K> stacked(total, ambient, zero);
    int off = 0;
    for (const auto& m : ms) {
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& [j, v] : m.row(i))
                stacked.set(off + i, j, v);
        off += m.rows();
    }
    return kernel_basis(stacked);
}

// dim ker(d_out) - rank(d_in); requires d_out . d_in = 0.
template <class K>
int cohomology_dim(const Matrix<K>& d_in, const Matrix<K>& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("cohomology_dim: shapes do not chain");
    Matrix<K> comp = d_out * d_in;
    if (auto nz = comp.first_nonzero())
        throw std::domain_error("cohomology_dim: d_out*d_in nonzero at (" + std::to_string(nz->first) + "," +
                                std::to_string(nz->second) + ")");
    int kd = d_out.cols() - rank(d_out);
    return kd - rank(d_in);
}

// Representatives of ker(d_out)/im(d_in): kernel basis vectors whose span
// complements the image inside the kernel.
template <class K>
std::vector<std::vector<K>> cohomology_reps(const Matrix<K>& d_in, const Matrix<K>& d_out)
{
    const K& zero = d_in.zero();
    Subspace<K> ker = kernel_basis(d_out);
    Subspace<K> img = image_basis(d_in);
    // grow a basis of im(d_in) by kernel vectors; the added ones are reps
    std::vector<std::vector<K>> cols;
    for (int j = 0; j < img.dim(); ++j)
        cols.push_back(img.basis.column(j));
    std::vector<std::vector<K>> reps;
    int r = img.dim();
    for (int j = 0; j < ker.dim(); ++j) {
        auto cand = ker.basis.column(j);
        cols.push_back(cand);
        Matrix<K> m = Matrix<K>::from_columns(d_in.rows(), cols, zero);
        if (rank(m) > r) {
            ++r;
            reps.push_back(cand);
        } else {
            cols.pop_back();
        }
    }
    return reps;
}

}  // namespace th2
