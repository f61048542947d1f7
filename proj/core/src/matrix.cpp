#include "hypercox/matrix.hpp"

#include "hypercox/errors.hpp"

#include <functional>
#include <numeric>

namespace hypercox {

Matrix::Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Matrix::Matrix(std::vector<std::vector<AlgNum>> rows) {
    r_ = rows.size();
    c_ = rows.empty() ? 0 : rows.front().size();
    a_.reserve(r_ * c_);
    for (auto& row : rows) {
        if (row.size() != c_) throw InvalidInput("ragged matrix rows");
        for (auto& x : row) a_.push_back(std::move(x));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgNum(1);
    return m;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = i + 1; j < c_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

Matrix Matrix::unified() const {
    Matrix m = *this;
    auto u = unify_all(a_);
    m.a_ = std::move(u);
    return m;
}

TowerPtr Matrix::common_tower() const {
    if (a_.empty()) return Tower::rationals();
    return unify_all(a_).front().tower();
}

Matrix Matrix::principal(const std::vector<int>& idx) const { return submatrix(idx, idx); }

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            m(i, j) = (*this)(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw InvalidInput("matrix shape mismatch");
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t k = 0; k < c_; ++k) {
            const AlgNum& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const AlgNum& b = o(k, j);
                if (!b.is_zero()) m(i, j) += a * b;
            }
        }
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

AlgNum Matrix::trace() const {
    AlgNum t;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != o.a_[i]) return false;
    }
    return true;
}

AlgNum determinant(const Matrix& m0) {
    if (!m0.is_square()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m0.rows();
    Matrix m = m0.unified();
    AlgNum det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return AlgNum(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        const AlgNum piv = m(k, k);
        det *= piv;
        const AlgNum inv = piv.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const AlgNum f = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
            }
        }
    }
    return det;
}

Matrix inverse(const Matrix& m0) {
    if (!m0.is_square()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = m0.rows();
    Matrix m = m0.unified();
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) throw DivisionByZero();
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        }
        const AlgNum pinv = m(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!m(k, j).is_zero()) m(k, j) *= pinv;
            if (!inv(k, j).is_zero()) inv(k, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            const AlgNum f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::vector<AlgNum> characteristic_polynomial(const Matrix& a0) {
    if (!a0.is_square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
    const std::size_t n = a0.rows();
    const Matrix a = a0.unified();
    std::vector<AlgNum> c(n + 1);
    c[n] = AlgNum(1);
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        c[n - k] = -(a * mk).trace() / AlgNum(static_cast<long>(k));
    }
    return c;
}

bool is_positive_definite(const Matrix& m0) {
    if (!m0.is_square()) return false;
    const std::size_t n = m0.rows();
    Matrix m = m0.unified();
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k).sign() <= 0) return false;
        const AlgNum inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const AlgNum f = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
            }
        }
    }
    return true;
}

bool is_positive_semidefinite(const Matrix& m) {
    auto c = characteristic_polynomial(m);
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k <= n; ++k) {
        const int s = c[n - k].sign();
        const int e = (k % 2 == 0) ? s : -s;
        if (e < 0) return false;
    }
    return true;
}

Signature signature(const Matrix& m) {
    auto c = characteristic_polynomial(m);
    const std::size_t n = m.rows();
    Signature sig;
    std::size_t low = 0;
    while (low < n && c[low].is_zero()) ++low;
    sig.zero = static_cast<int>(low);
    std::vector<int> s_pos, s_neg;
    for (std::size_t k = low; k <= n; ++k) {
        const int s = c[k].sign();
        s_pos.push_back(s);
        s_neg.push_back(k % 2 == 0 ? s : -s);
    }
    sig.pos = sign_variations(s_pos);
    sig.neg = sign_variations(s_neg);
    return sig;
}

std::vector<std::vector<int>> components(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) {
                parent[static_cast<std::size_t>(find(i))] = find(j);
            }
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
    }
    return out;
}

bool is_parabolic(const Matrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    for (const auto& comp : components(m)) {
        if (!determinant(m.principal(comp)).is_zero()) return false;
    }
    // every component singular already rules out definiteness
    return is_positive_semidefinite(m);
}

Matrix apply_embedding(const Matrix& m, const Embedding& sigma) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const AlgNum& x = m(i, j);
            out(i, j) = apply_embedding(x, sigma);
        }
    }
    return out;
}

}  // namespace hypercox
