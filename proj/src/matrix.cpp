#include "cycgm/matrix.hpp"

namespace cycgm {

RfMatrix::RfMatrix(VarTablePtr table, std::size_t rows, std::size_t cols)
    : table_(table), rows_(rows), cols_(cols), data_(rows * cols, RatFunc(table)) {}

RfMatrix RfMatrix::identity(VarTablePtr table, std::size_t n) {
    RfMatrix m(table, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(table, Rational(1));
    return m;
}

RfMatrix RfMatrix::from_columns(VarTablePtr table, const std::vector<std::vector<RatFunc>>& cols) {
    const std::size_t nc = cols.size();
    const std::size_t nr = nc == 0 ? 0 : cols.front().size();
    RfMatrix m(table, nr, nc);
    for (std::size_t j = 0; j < nc; ++j) {
        if (cols[j].size() != nr) throw Error("ragged column list");
        for (std::size_t i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RfMatrix operator+(const RfMatrix& a, const RfMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
    RfMatrix r(a.table_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

RfMatrix operator-(const RfMatrix& a, const RfMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
    RfMatrix r(a.table_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
    RfMatrix r(a.table_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            RatFunc acc(a.table_);
            for (std::size_t k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

RfMatrix RfMatrix::operator*(const RatFunc& s) const {
    RfMatrix r(table_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

bool RfMatrix::operator==(const RfMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RfMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

RfMatrix RfMatrix::derivative(std::size_t var) const {
    RfMatrix r(table_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].derivative(var);
    return r;
}

RatFunc det(const RfMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    const VarTablePtr& table = m.table();
    const std::size_t n = m.rows();
    if (n == 0) return RatFunc::constant(table, Rational(1));

    // Clear denominators column by column; track the combined factor.
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(table)));
    MultiPoly scale = MultiPoly::constant(table, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly col_den = MultiPoly::constant(table, Rational(1));
        for (std::size_t i = 0; i < n; ++i)
            col_den = div_checked(col_den * m.at(i, j).den(), gcd(col_den, m.at(i, j).den()));
        for (std::size_t i = 0; i < n; ++i)
            a[i][j] = m.at(i, j).num() * div_checked(col_den, m.at(i, j).den());
        scale = scale * col_den;
    }

    // Bareiss elimination with row pivoting.
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(table, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return RatFunc(table);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = div_checked(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = MultiPoly(table);
        }
        prev = a[k][k];
    }
    MultiPoly result = a[n - 1][n - 1];
    if (sign < 0) result = -result;
    return RatFunc::make(std::move(result), std::move(scale));
}

}  // namespace cycgm
