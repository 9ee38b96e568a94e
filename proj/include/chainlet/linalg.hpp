#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chainlet {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec axpy(double s, const Vec& x, const Vec& y) {
    Vec r(y);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += s * x[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) { return axpy(1.0, a, b); }
inline Vec sub(const Vec& a, const Vec& b) { return axpy(-1.0, b, a); }

inline Vec scaled(const Vec& a, double s) {
    Vec r(a);
    for (double& x : r) x *= s;
    return r;
}

/// Dense row-major matrix, just big enough for Jacobians and Gram matrices.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols) throw std::invalid_argument("Mat::apply: size mismatch");
        Vec y(rows, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }
};

inline Mat matmul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul: size mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline double det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
    const std::size_t n = m.rows;
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(m(r, c)) > std::fabs(m(p, c))) p = r;
        if (m(p, c) == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

/// Gram matrix <v_i, v_j> of a list of vectors.
inline Mat gram(const std::vector<Vec>& v) {
    Mat g(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) g(i, j) = dot(v[i], v[j]);
    return g;
}

/// sqrt(det Gram): the k-volume of the parallelepiped spanned by the vectors.
inline double gram_volume(const std::vector<Vec>& v) {
    if (v.empty()) return 1.0;
    const double g = det(gram(v));
    return g <= 0.0 ? 0.0 : std::sqrt(g);
}

/// Deterministic pairwise reduction; keeps summation order-independent
/// across chunked evaluation.
inline double pairwise_sum(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    std::vector<double> buf(xs);
    std::size_t m = buf.size();
    while (m > 1) {
        std::size_t h = 0;
        for (std::size_t i = 0; i + 1 < m; i += 2) buf[h++] = buf[i] + buf[i + 1];
        if (m % 2 == 1) buf[h++] = buf[m - 1];
        m = h;
    }
    return buf[0];
}

}  // namespace chainlet
