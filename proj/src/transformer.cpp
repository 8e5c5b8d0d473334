#include "gaiakit/transformer.hpp"

#include <cmath>
#include <random>

namespace gaiakit::learn {

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            double v = a.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
    Matrix out = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) += b.at(i, j);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix softmax_columns(const Matrix& scores) {
    Matrix out(scores.rows(), scores.cols());
    for (int j = 0; j < scores.cols(); ++j) {
        double mx = scores.at(0, j);
        for (int i = 1; i < scores.rows(); ++i) mx = std::max(mx, scores.at(i, j));
        double sum = 0;
        for (int i = 0; i < scores.rows(); ++i) sum += std::exp(scores.at(i, j) - mx);
        for (int i = 0; i < scores.rows(); ++i)
            out.at(i, j) = std::exp(scores.at(i, j) - mx) / sum;
    }
    return out;
}

Matrix relu(const Matrix& m) {
    Matrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = std::max(0.0, m.at(i, j));
    return out;
}

Matrix permutation_matrix(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    Matrix P(n, n);
    for (int j = 0; j < n; ++j) {
        if (perm[j] < 0 || perm[j] >= n) throw InputError("bad permutation");
        // column j has a 1 in row perm[j]: XP permutes columns by perm
        P.at(perm[j], j) = 1.0;
    }
    return P;
}

TransformerBlock TransformerBlock::zeros(int d, int heads, int head_dim, int hidden) {
    TransformerBlock b;
    b.d = d;
    b.heads = heads;
    b.head_dim = head_dim;
    b.hidden = hidden;
    for (int i = 0; i < heads; ++i) {
        b.Wo.emplace_back(d, head_dim);
        b.Wv.emplace_back(head_dim, d);
        b.Wk.emplace_back(head_dim, d);
        b.Wq.emplace_back(head_dim, d);
    }
    b.W1 = Matrix(hidden, d);
    b.W2 = Matrix(d, hidden);
    b.b1.assign(hidden, 0.0);
    return b;
}

TransformerBlock TransformerBlock::random(std::uint64_t seed, int d, int heads, int head_dim,
                                          int hidden) {
    TransformerBlock b = zeros(d, heads, head_dim, hidden);
    std::mt19937_64 rng(seed);
    auto u = [&]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
    auto fill = [&](Matrix& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = u();
    };
    for (int i = 0; i < heads; ++i) {
        fill(b.Wo[i]);
        fill(b.Wv[i]);
        fill(b.Wk[i]);
        fill(b.Wq[i]);
    }
    fill(b.W1);
    fill(b.W2);
    for (auto& x : b.b1) x = u();
    return b;
}

Matrix transformer_block_apply(const TransformerBlock& block, const Matrix& X) {
    if (X.rows() != block.d) throw InputError("transformer input has wrong token dimension");
    const int n = X.cols();

    Matrix attn = X;
    for (int i = 0; i < block.heads; ++i) {
        Matrix keys = block.Wk[i] * X;   // m x n
        Matrix queries = block.Wq[i] * X; // m x n
        Matrix scores = keys.transposed() * queries; // n x n
        Matrix weights = softmax_columns(scores);
        attn = attn + block.Wo[i] * (block.Wv[i] * X) * weights;
    }

    // b1 1_n^T broadcasts the bias across tokens
    Matrix pre = block.W1 * attn; // r x n
    for (int i = 0; i < block.hidden; ++i)
        for (int j = 0; j < n; ++j) pre.at(i, j) += block.b1[i];
    return attn + block.W2 * relu(pre);
}

double equivariance_deviation(const TransformerBlock& block, const Matrix& X,
                              const std::vector<int>& perm) {
    Matrix P = permutation_matrix(perm);
    Matrix lhs = transformer_block_apply(block, X * P);
    Matrix rhs = transformer_block_apply(block, X) * P;
    double dev = 0;
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            dev = std::max(dev, std::abs(lhs.at(i, j) - rhs.at(i, j)));
    return dev;
}

} // namespace gaiakit::learn
