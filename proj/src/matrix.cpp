#include "rbd/matrix.hpp"

#include <sstream>

#include "json.hpp"

namespace rbd {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix literal");
        for (const auto& x : row) a_.push_back(x);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool ExactMatrix::is_integer() const {
    for (const auto& x : a_)
        if (!x.is_integer()) return false;
    return true;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

ExactMatrix ExactMatrix::direct_sum(const ExactMatrix& other) const {
    ExactMatrix r(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j)
            r.at(rows_ + i, cols_ + j) = other.at(i, j);
    return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch");
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch");
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& m) {
    ExactMatrix r = m;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Fraction-free elimination; exact divisions by the previous pivot.
Rational bareiss_determinant(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Integer> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).to_integer();

    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k * n + k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a[p * n + k]) == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Integer det = a[(n - 1) * n + (n - 1)];
    return Rational(sign < 0 ? Integer(-det) : det);
}

Rational rational_determinant(ExactMatrix a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

}  // namespace

Rational ExactMatrix::determinant() const {
    if (!is_square()) throw InputError("determinant of non-square matrix");
    if (rows_ == 0) return Rational(1);
    return is_integer() ? bareiss_determinant(*this) : rational_determinant(*this);
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) throw InputError("inverse of non-square matrix");
    const std::size_t n = rows_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) throw InputError("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rational piv = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

ExactMatrix ExactMatrix::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InputError("matrix JSON must be an array of arrays");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("ragged matrix JSON");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            if (cell.is_number_integer())
                m.at(i, k) = Rational(static_cast<long>(cell.get<long long>()));
            else if (cell.is_string())
                m.at(i, k) = Rational::parse(cell.get<std::string>());
            else
                throw InputError("matrix entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

std::string ExactMatrix::to_json_text() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_integer() && mpz_fits_slong_p(x.num().get_mpz_t()))
                row.push_back(x.num().get_si());
            else
                row.push_back(x.str());
        }
        j.push_back(row);
    }
    return j.dump();
}

}  // namespace rbd
