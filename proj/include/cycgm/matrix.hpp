#pragma once

#include <vector>

#include "cycgm/ratfunc.hpp"

namespace cycgm {

/// Small dense matrix of rational functions.
class RfMatrix {
public:
    RfMatrix(VarTablePtr table, std::size_t rows, std::size_t cols);
    static RfMatrix identity(VarTablePtr table, std::size_t n);
    /// Column-major assembly from coordinate vectors.
    static RfMatrix from_columns(VarTablePtr table, const std::vector<std::vector<RatFunc>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFunc& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RfMatrix operator+(const RfMatrix& a, const RfMatrix& b);
    friend RfMatrix operator-(const RfMatrix& a, const RfMatrix& b);
    friend RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
    RfMatrix operator*(const RatFunc& s) const;

    bool operator==(const RfMatrix& rhs) const;
    bool operator!=(const RfMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    /// Entry-wise derivative in a parameter variable.
    RfMatrix derivative(std::size_t var) const;

    const VarTablePtr& table() const { return table_; }

private:
    VarTablePtr table_;
    std::size_t rows_, cols_;
    std::vector<RatFunc> data_;
};

/// Exact determinant. Denominators are cleared per column, then Bareiss
/// fraction-free elimination runs over the polynomial lift.
RatFunc det(const RfMatrix& m);

}  // namespace cycgm
