#include "ur/matrix.hpp"

#include <numeric>

namespace ur {

ComplexMatrix complexify(const ExactMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = GaussianRational(m.at(i, j));
    return out;
}

Polynomial char_poly(const ExactMatrix& m) {
    require(m.square(), "NotSquare", "characteristic polynomial of a non-square matrix");
    int n = m.rows();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = 1;
    ExactMatrix am(n, n);  // A * M_{k-1}, zero for k = 1
    for (int k = 1; k <= n; ++k) {
        ExactMatrix mk = am;
        const Rational& shift = c[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) mk.at(i, i) += shift;
        am = m * mk;
        c[static_cast<std::size_t>(n - k)] = -am.trace() / Rational(k);
    }
    return Polynomial(std::move(c));
}

namespace {

// Fraction-free (Bareiss) elimination; exact over any of our scalar fields.
template <typename T>
int bareiss_rank(Matrix<T> work) {
    const T zero{};
    int rank_count = 0;
    T prev_pivot(Rational(1));
    int row = 0;
    for (int col = 0; col < work.cols() && row < work.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < work.rows(); ++i)
            if (!(work.at(i, col) == zero)) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int j = 0; j < work.cols(); ++j) std::swap(work.at(row, j), work.at(pivot_row, j));
        const T pivot = work.at(row, col);
        for (int i = row + 1; i < work.rows(); ++i) {
            for (int j = col + 1; j < work.cols(); ++j)
                work.at(i, j) =
                    (work.at(i, j) * pivot - work.at(i, col) * work.at(row, j)) / prev_pivot;
            work.at(i, col) = zero;
        }
        prev_pivot = pivot;
        ++rank_count;
        ++row;
    }
    return rank_count;
}

// Reduced row echelon form; returns pivot column per pivot row.
template <typename T>
std::vector<int> rref(Matrix<T>& work) {
    const T zero{};
    const T one(Rational(1));
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < work.cols() && row < work.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < work.rows(); ++i)
            if (!(work.at(i, col) == zero)) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int j = 0; j < work.cols(); ++j) std::swap(work.at(row, j), work.at(pivot_row, j));
        const T pivot = work.at(row, col);
        for (int j = col; j < work.cols(); ++j) work.at(row, j) = work.at(row, j) / pivot;
        work.at(row, col) = one;
        for (int i = 0; i < work.rows(); ++i) {
            if (i == row || work.at(i, col) == zero) continue;
            const T factor = work.at(i, col);
            for (int j = col; j < work.cols(); ++j)
                work.at(i, j) = work.at(i, j) - factor * work.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

Int lcm_int(const Int& a, const Int& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

void make_primitive(std::vector<Rational>& v) {
    Int den_lcm(1), num_gcd(0);
    for (const auto& x : v)
        if (x != 0) den_lcm = lcm_int(den_lcm, denominator(x));
    for (auto& x : v) x *= Rational(den_lcm);
    for (const auto& x : v)
        if (x != 0) num_gcd = boost::multiprecision::gcd(num_gcd, Int(abs(numerator(x))));
    if (num_gcd > 1)
        for (auto& x : v) x /= Rational(num_gcd);
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

void make_primitive(std::vector<GaussianRational>& v) {
    Int den_lcm(1), num_gcd(0);
    for (const auto& z : v) {
        if (z.re != 0) den_lcm = lcm_int(den_lcm, denominator(z.re));
        if (z.im != 0) den_lcm = lcm_int(den_lcm, denominator(z.im));
    }
    for (auto& z : v) z = z * Rational(den_lcm);
    for (const auto& z : v) {
        if (z.re != 0) num_gcd = boost::multiprecision::gcd(num_gcd, Int(abs(numerator(z.re))));
        if (z.im != 0) num_gcd = boost::multiprecision::gcd(num_gcd, Int(abs(numerator(z.im))));
    }
    if (num_gcd > 1)
        for (auto& z : v) z = z * Rational(Rational(1) / Rational(num_gcd));
    for (const auto& z : v) {
        if (z == GaussianRational(Rational(0))) continue;
        const Rational& lead = z.re != 0 ? z.re : z.im;
        if (lead < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

template <typename T>
std::vector<std::vector<T>> nullspace_impl(const Matrix<T>& m) {
    Matrix<T> work = m;
    std::vector<int> pivot_cols = rref(work);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<T>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<T> v(static_cast<std::size_t>(m.cols()), T());
        v[static_cast<std::size_t>(free_col)] = T(Rational(1));
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(pivot_cols[r])] =
                T() - work.at(static_cast<int>(r), free_col);
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

int rank(const ExactMatrix& m) { return bareiss_rank(m); }
int rank(const ComplexMatrix& m) { return bareiss_rank(m); }

std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m) {
    return nullspace_impl(m);
}
std::vector<std::vector<GaussianRational>> nullspace_basis(const ComplexMatrix& m) {
    return nullspace_impl(m);
}

}  // namespace ur
