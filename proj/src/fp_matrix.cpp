#include "dlcoh/fp_matrix.hpp"

#include <sstream>

#include "dlcoh/errors.hpp"

namespace dlcoh {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (!is_prime(p) || p > 65521) throw InvalidArgument("field characteristic must be a prime below 2^16");
}

Matrix Matrix::identity(std::size_t n, Scalar p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    data_[i * cols_ + j] = static_cast<Scalar>(r);
}

Matrix::Scalar Matrix::inv(Scalar a) const {
    if (a == 0) throw InvalidArgument("inverse of zero in F_p");
    // Fermat: a^(p-2)
    Scalar result = 1, base = a;
    for (Scalar e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidArgument("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                auto& o = out.data_[i * rhs.cols_ + j];
                o = add(o, mul(a, rhs.data_[k * rhs.cols_ + j]));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(std::int64_t c) const {
    auto r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    Matrix out(*this);
    for (auto& x : out.data_) x = mul(x, static_cast<Scalar>(r));
    return out;
}

bool Matrix::is_zero() const {
    for (auto x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::column(std::size_t j) const { return columns({j}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) out.data_[i * idx.size() + k] = (*this)(i, idx[k]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw InvalidArgument("hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out.data_[i * out.cols_ + j] = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * out.cols_ + a.cols_ + j] = b(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw InvalidArgument("vstack column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_, a.p_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

Echelon rref(const Matrix& a) {
    Echelon e{a, {}};
    Matrix& m = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                auto t = m(row, j);
                m.set(row, j, m(pivot, j));
                m.set(pivot, j, t);
            }
        auto scale = m.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, m.mul(m(row, j), scale));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            auto f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.set(i, j, m.sub(m(i, j), m.mul(f, m(row, j))));
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& a) { return a.empty() ? 0 : rref(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
    const auto p = a.prime();
    if (a.cols() == 0) return Matrix(0, 0, p);
    if (a.rows() == 0) return Matrix::identity(a.cols(), p);
    auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix basis(a.cols(), free.size(), p);
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis.set(free[k], k, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis.set(e.pivots[r], k, -static_cast<std::int64_t>(e.reduced(r, free[k])));
    }
    return basis;
}

Matrix column_basis(const Matrix& a) {
    if (a.empty()) return Matrix(a.rows(), 0, a.prime());
    return a.columns(rref(a).pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    const auto p = a.prime();
    if (a.rows() != b.rows()) throw InvalidArgument("solve: row mismatch");
    Matrix x(a.cols(), b.cols(), p);
    if (b.cols() == 0) return x;
    if (a.cols() == 0) return b.is_zero() ? std::optional<Matrix>(x) : std::nullopt;
    auto e = rref(Matrix::hstack(a, b));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t k = 0; k < b.cols(); ++k) x.set(e.pivots[r], k, e.reduced(r, a.cols() + k));
    }
    return x;
}

Matrix complement_basis(const Matrix& sub, std::size_t n, Matrix::Scalar p) {
    Matrix span = sub.cols() == 0 ? Matrix(n, 0, p) : sub;
    auto combined = Matrix::hstack(span, Matrix::identity(n, p));
    auto e = rref(combined);
    std::vector<std::size_t> chosen;
    for (auto c : e.pivots)
        if (c >= span.cols()) chosen.push_back(c - span.cols());
    return Matrix::identity(n, p).columns(chosen);
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve(a, Matrix::identity(a.rows(), a.prime()));
}

bool column_span_contains(const Matrix& space, const Matrix& sub) {
    if (sub.cols() == 0) return true;
    if (space.cols() == 0) return sub.is_zero();
    return rank(Matrix::hstack(space, sub)) == rank(space);
}

}  // namespace dlcoh
