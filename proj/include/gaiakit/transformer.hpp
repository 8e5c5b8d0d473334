#pragma once

#include <cstdint>
#include <vector>

#include "gaiakit/common.hpp"

namespace gaiakit::learn {

// Small dense matrix, row-major; just enough linear algebra for the
// attention block.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int r, int c) { return data_[r * cols_ + c]; }
    double at(int r, int c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    Matrix transposed() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// Softmax applied to each column independently.
Matrix softmax_columns(const Matrix& scores);

Matrix relu(const Matrix& m);

Matrix permutation_matrix(const std::vector<int>& perm);

// One attention-plus-feedforward block on d x n token matrices:
//   Attn(X) = X + Σ_i Wo_i (Wv_i X) softmax_cols[(Wk_i X)^T (Wq_i X)]
//   FF(X)   = Attn(X) + W2 relu(W1 Attn(X) + b1 1_n^T)
// The computed map satisfies FF(XP) = FF(X)P for permutation matrices P.
struct TransformerBlock {
    int d = 0;        // token dimension
    int heads = 0;    // h
    int head_dim = 0; // m
    int hidden = 0;   // r

    std::vector<Matrix> Wo; // d x m, per head
    std::vector<Matrix> Wv; // m x d
    std::vector<Matrix> Wk; // m x d
    std::vector<Matrix> Wq; // m x d
    Matrix W1;              // r x d
    Matrix W2;              // d x r
    std::vector<double> b1; // r

    static TransformerBlock random(std::uint64_t seed, int d, int heads, int head_dim,
                                   int hidden);
    static TransformerBlock zeros(int d, int heads, int head_dim, int hidden);
};

Matrix transformer_block_apply(const TransformerBlock& block, const Matrix& X);

// max |FF(XP) - FF(X)P| over the entries, for one permutation.
double equivariance_deviation(const TransformerBlock& block, const Matrix& X,
                              const std::vector<int>& perm);

} // namespace gaiakit::learn
