#include "sombor/matrix.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sombor/report.hpp"

namespace sombor {

DenseSymMatrix::DenseSymMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("matrix order must be positive");
    data_.assign(static_cast<size_t>(order) * order, 0.0);
}

DenseSymMatrix DenseSymMatrix::from_rows(int order, std::vector<double> row_major) {
    DenseSymMatrix m(order);
    if (row_major.size() != m.data_.size())
        throw std::invalid_argument("matrix data size does not match order");
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            double v = row_major[static_cast<size_t>(i) * order + j];
            if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
            if (v != row_major[static_cast<size_t>(j) * order + i])
                throw std::invalid_argument("matrix data is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    m.data_ = std::move(row_major);
    return m;
}

size_t DenseSymMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for order " + std::to_string(order_));
    return static_cast<size_t>(i) * order_ + j;
}

void DenseSymMatrix::set(int i, int j, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("matrix entries must be finite");
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
}

double DenseSymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
}

double DenseSymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

void DenseSymMatrix::dump(std::ostream& out) const {
    out << order_ << '\n';
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j) {
            if (j) out << ' ';
            out << format_double((*this)(i, j), 17);
        }
        out << '\n';
    }
}

DenseSymMatrix kronecker(const DenseSymMatrix& a, const DenseSymMatrix& b, int max_order) {
    const long long order = static_cast<long long>(a.order()) * b.order();
    if (order > max_order)
        throw std::runtime_error("kronecker: product order " + std::to_string(order) +
                                 " exceeds cap " + std::to_string(max_order));
    DenseSymMatrix out(static_cast<int>(order));
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) {
            const double scale = a(i, j);
            for (int p = 0; p < b.order(); ++p)
                for (int q = 0; q < b.order(); ++q)
                    out.set(i * b.order() + p, j * b.order() + q, scale * b(p, q));
        }
    return out;
}

}  // namespace sombor
