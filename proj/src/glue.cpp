#include "ur/glue.hpp"

namespace ur {

namespace {

void check_eigenpair(const ExactMatrix& b, const EigenPair& pair) {
    int m = b.rows();
    require(static_cast<int>(pair.left.size()) == m && static_cast<int>(pair.right.size()) == m,
            "InvalidInput", "eigenpair dimension mismatch");
    Rational inner(0);
    for (int i = 0; i < m; ++i) inner += pair.left[static_cast<std::size_t>(i)] *
                                         pair.right[static_cast<std::size_t>(i)];
    require(inner == 1, "InvalidInput", "eigenpair is not normalized to t^T s = 1");
    for (int j = 0; j < m; ++j) {
        Rational row_sum(0), col_sum(0);
        for (int i = 0; i < m; ++i) {
            row_sum += pair.left[static_cast<std::size_t>(i)] * b.at(i, j);
            col_sum += b.at(j, i) * pair.right[static_cast<std::size_t>(i)];
        }
        require(row_sum == pair.eigenvalue * pair.left[static_cast<std::size_t>(j)],
                "InvalidInput", "left eigenvector equation fails");
        require(col_sum == pair.eigenvalue * pair.right[static_cast<std::size_t>(j)],
                "InvalidInput", "right eigenvector equation fails");
    }
}

}  // namespace

ExactMatrix smigoc_glue(const GlueInput& input) {
    const ExactMatrix& top = input.top;
    const ExactMatrix& bottom = input.bottom;
    require(top.square() && bottom.square(), "NotSquare", "glue needs square matrices");
    int n = top.rows();
    int m = bottom.rows();
    require(top.at(n - 1, n - 1) == input.eigenpair.eigenvalue, "CornerMismatch",
            "top corner entry " + to_string(top.at(n - 1, n - 1)) + " differs from glue value " +
                to_string(input.eigenpair.eigenvalue));
    check_eigenpair(bottom, input.eigenpair);

    ExactMatrix out(n - 1 + m, n - 1 + m);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, n - 1 + j) = top.at(i, n - 1) * input.eigenpair.left[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n - 1; ++j)
            out.at(n - 1 + i, j) = input.eigenpair.right[static_cast<std::size_t>(i)] * top.at(n - 1, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.at(n - 1 + i, n - 1 + j) = bottom.at(i, j);
    return out;
}

ExactMatrix glue_chain(const GlueChain& chain) {
    require(!chain.links.empty(), "InvalidInput", "empty glue chain");
    require(chain.glue_values.size() + 1 == chain.links.size(), "InvalidInput",
            "a chain of t links needs t - 1 glue values");
    ExactMatrix running = chain.links.front().dense();
    for (std::size_t k = 1; k < chain.links.size(); ++k) {
        const Rational& glue_value = chain.glue_values[k - 1];
        int sz = running.rows();
        require(running.at(sz - 1, sz - 1) == glue_value, "CornerMismatch",
                "link " + std::to_string(k) + ": running corner " +
                    to_string(running.at(sz - 1, sz - 1)) + " differs from glue value " +
                    to_string(glue_value));
        EigenPair pair;
        try {
            pair = perron_eigenpair(chain.links[k], glue_value);
        } catch (const Error& e) {
            fail(e.code(), "link " + std::to_string(k) + ": " + e.what());
        }
        running = smigoc_glue({std::move(running), chain.links[k].dense(), std::move(pair)});
    }
    return running;
}

EigenPair eigenpair_general(const ExactMatrix& b, const Rational& c) {
    require(b.square(), "NotSquare", "eigenpair of a non-square matrix");
    Polynomial p = char_poly(b);
    require(p.eval(c) == 0, "NotAnEigenvalue",
            to_string(c) + " is not an eigenvalue");
    require(p.derivative().eval(c) != 0, "NotSimple", to_string(c) + " is a multiple eigenvalue");

    int m = b.rows();
    ExactMatrix shifted = b;
    ExactMatrix shifted_t = b.transpose();
    for (int i = 0; i < m; ++i) {
        shifted.at(i, i) -= c;
        shifted_t.at(i, i) -= c;
    }
    auto right = nullspace_basis(shifted);
    auto left = nullspace_basis(shifted_t);
    require(right.size() == 1 && left.size() == 1, "NotSimple",
            "eigenspace at " + to_string(c) + " is not one-dimensional");

    EigenPair pair;
    pair.eigenvalue = c;
    pair.left = left.front();
    pair.right = right.front();
    for (const auto& x : pair.left)
        require(x >= 0, "EigenpairNotNonnegative", "left eigenvector has a negative entry");
    for (const auto& x : pair.right)
        require(x >= 0, "EigenpairNotNonnegative", "right eigenvector has a negative entry");
    Rational inner(0);
    for (int i = 0; i < m; ++i) inner += pair.left[static_cast<std::size_t>(i)] *
                                         pair.right[static_cast<std::size_t>(i)];
    require(inner != 0, "Internal", "degenerate inner product at a simple eigenvalue");
    for (auto& x : pair.right) x /= inner;
    pair.normalizer = inner;
    return pair;
}

}  // namespace ur
