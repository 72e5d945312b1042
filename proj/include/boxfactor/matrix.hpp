#pragma once

#include "boxfactor/error.hpp"
#include "boxfactor/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <string>

namespace boxfactor {

template <typename Scalar>
using AdjacencyMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// 0/1 matrix; the diagonal carries the loop flags.
template <typename Scalar = int>
AdjacencyMatrix<Scalar> adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    AdjacencyMatrix<Scalar> a = AdjacencyMatrix<Scalar>::Zero(n, n);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            a(v, w) = Scalar(1);
        }
        if (g.is_looped(v)) {
            a(v, v) = Scalar(1);
        }
    }
    return a;
}

/// I_n (x) B + A (x) I_m for square A (n x n) and B (m x m).
/// Diagonal entries are left unclamped and may exceed 1.
template <typename DerivedA, typename DerivedB>
AdjacencyMatrix<typename DerivedA::Scalar> kronecker_sum(const Eigen::MatrixBase<DerivedA>& a,
                                                         const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>, "kronecker_sum: mixed scalar types");
    if (a.rows() != a.cols() || b.rows() != b.cols()) {
        throw Error(ErrorCode::NonSquareInput, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                                                   std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    const Eigen::Index n = a.rows();
    const Eigen::Index m = b.rows();
    AdjacencyMatrix<Scalar> out = AdjacencyMatrix<Scalar>::Zero(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.block(i * m, i * m, m, m) += b;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (a(i, j) != Scalar(0)) {
                out.block(i * m, j * m, m, m).diagonal().array() += a(i, j);
            }
        }
    }
    return out;
}

/// Positive diagonal entries become loops; off-diagonal entries must be 0 or 1
/// and symmetric. Throws NonSquareInput or AsymmetricMatrix.
template <typename Derived>
Graph graph_from_adjacency(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NonSquareInput, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<bool> looped(n, false);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        looped[i] = a(i, i) > Scalar(0);
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i == j) {
                continue;
            }
            const Scalar x = a(i, j);
            if (x != a(j, i) || (x != Scalar(0) && x != Scalar(1))) {
                throw Error(ErrorCode::AsymmetricMatrix,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (x == Scalar(1)) {
                adj[i].push_back(static_cast<Vertex>(j));
            }
        }
    }
    return Graph(std::move(adj), std::move(looped));
}

/// Copy with every positive diagonal entry set to 1.
template <typename Derived>
AdjacencyMatrix<typename Derived::Scalar> clamp_diagonal(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    AdjacencyMatrix<Scalar> out = a;
    out.diagonal() = out.diagonal().unaryExpr([](Scalar x) { return x > Scalar(0) ? Scalar(1) : Scalar(0); });
    return out;
}

} // namespace boxfactor
