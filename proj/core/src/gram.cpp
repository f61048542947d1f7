#include "hypercox/gram.hpp"

#include "hypercox/errors.hpp"

#include <mutex>
#include <optional>

namespace hypercox {

struct GramMatrix::Cache {
    std::mutex mu;
    std::optional<Matrix> normalized;
};

GramMatrix::GramMatrix() : cache_(std::make_shared<Cache>()) {}

GramMatrix::GramMatrix(const Matrix& g) : GramMatrix(g, false) {
    for (std::size_t i = 0; i < size(); ++i) {
        if (g(i, i) != AlgNum(1)) throw InvalidInput("Gram matrix diagonal must be 1");
    }
}

GramMatrix GramMatrix::from_scaled(const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (b(i, i).sign() <= 0) throw InvalidInput("scaled Gram matrix needs a positive diagonal");
    }
    return GramMatrix(b, true);
}

GramMatrix::GramMatrix(Matrix b, bool) : b_(std::move(b)), cache_(std::make_shared<Cache>()) {
    if (!b_.is_square()) throw InvalidInput("Gram matrix must be square");
    if (!b_.is_symmetric()) throw InvalidInput("Gram matrix must be symmetric");
    const std::size_t n = size();
    sq_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                sq_[i * n + j] = AlgNum(1);
            } else if (j < i) {
                sq_[i * n + j] = sq_[j * n + i];
            } else if (!b_(i, j).is_zero()) {
                sq_[i * n + j] = (b_(i, j) * b_(i, j) / (b_(i, i) * b_(j, j))).trimmed();
            }
        }
    }
}

bool GramMatrix::has_unit_diagonal() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (b_(i, i) != AlgNum(1)) return false;
    }
    return true;
}

int GramMatrix::entry_sign(std::size_t i, std::size_t j) const { return i == j ? 1 : b_(i, j).sign(); }

const AlgNum& GramMatrix::entry_square(std::size_t i, std::size_t j) const { return sq_[i * size() + j]; }

AlgNum GramMatrix::entry(std::size_t i, std::size_t j) const {
    if (i == j) return AlgNum(1);
    const AlgNum& b = b_(i, j);
    if (b.is_zero()) return AlgNum(0);
    const AlgNum& di = b_(i, i);
    const AlgNum& dj = b_(j, j);
    if (di == AlgNum(1) && dj == AlgNum(1)) return b;
    return b / sqrt_extend(di * dj);
}

const Matrix& GramMatrix::normalized() const {
    std::lock_guard lk(cache_->mu);
    if (!cache_->normalized) {
        const std::size_t n = size();
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                g(i, j) = entry(i, j);
                g(j, i) = g(i, j);
            }
        }
        cache_->normalized = g.unified();
    }
    return *cache_->normalized;
}

GramMatrix GramMatrix::principal(const std::vector<int>& idx) const {
    GramMatrix r;
    r.b_ = b_.principal(idx);
    const std::size_t n = idx.size();
    r.sq_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r.sq_[i * n + j] = entry_square(static_cast<std::size_t>(idx[i]), static_cast<std::size_t>(idx[j]));
        }
    }
    return r;
}

GramMatrix GramMatrix::permuted(const std::vector<int>& perm) const {
    if (perm.size() != size()) throw InvalidInput("permutation size mismatch");
    return principal(perm);
}

Matrix schur_complement(const Matrix& b, const std::vector<int>& s, const std::vector<int>& t) {
    Matrix btt = b.principal(t);
    if (s.empty()) return btt;
    Matrix bts = b.submatrix(t, s);
    Matrix inv = inverse(b.principal(s));
    return btt - bts * inv * bts.transpose();
}

}  // namespace hypercox
