#pragma once

#include <iosfwd>
#include <vector>

namespace sombor {

/// Dense real symmetric matrix, row-major. Symmetry is structural: writes go
/// through set(), which mirrors the entry, and the checked factory rejects
/// asymmetric or non-finite data. Order is at least 1.
class DenseSymMatrix {
  public:
    /// Zero matrix of the given order. Throws std::invalid_argument if order < 1.
    explicit DenseSymMatrix(int order);

    /// Validates symmetry (exact equality) and finiteness of row-major data.
    static DenseSymMatrix from_rows(int order, std::vector<double> row_major);

    int order() const { return order_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }

    /// Sets entries (i,j) and (j,i). Throws std::invalid_argument on a
    /// non-finite value, std::out_of_range on a bad index.
    void set(int i, int j, double value);

    const std::vector<double>& data() const { return data_; }

    double trace() const;
    double frobenius_norm() const;

    /// Debug dump: order on line 1, then rows of space-separated values at 17
    /// significant digits.
    void dump(std::ostream& out) const;

    friend bool operator==(const DenseSymMatrix&, const DenseSymMatrix&) = default;

  private:
    size_t index(int i, int j) const;

    int order_ = 1;
    std::vector<double> data_;
};

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
/// Throws std::runtime_error if the product order exceeds max_order.
DenseSymMatrix kronecker(const DenseSymMatrix& a, const DenseSymMatrix& b, int max_order = 4096);

}  // namespace sombor
