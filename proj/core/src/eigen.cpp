#include "sombor/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sombor {

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double Spectrum::abs_sum() const {
    double s = 0.0;
    for (double v : values) s += std::abs(v);
    return s;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = a[static_cast<size_t>(i) * n + j];
            sum += 2.0 * v * v;
        }
    return std::sqrt(sum);
}

}  // namespace

Spectrum symmetric_eigenvalues(const DenseSymMatrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");
    for (double v : m.data())
        if (!std::isfinite(v)) throw std::invalid_argument("eigensolver: non-finite entry");

    const int n = m.order();
    std::vector<double> a = m.data();
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    const double norm = m.frobenius_norm();
    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_norm(a, n);
        if (off == 0.0 || off < tol * norm) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(p, i) = at(i, p);
                    at(i, q) = s * aip + c * aiq;
                    at(q, i) = at(i, q);
                }
            }
    }
    if (sweep == max_sweeps)
        throw std::runtime_error("eigensolver: did not converge within sweep limit");

    Spectrum spec;
    spec.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) spec.values[static_cast<size_t>(i)] = at(i, i);
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

double energy(const DenseSymMatrix& m, double tol) {
    return symmetric_eigenvalues(m, tol).abs_sum();
}

}  // namespace sombor
