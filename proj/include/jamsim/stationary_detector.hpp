#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jamsim::stationary {

// Minimal row-major matrix; feature tables are small (records x 6).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    std::span<const double> row(int r) const {
        return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
    }
};

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
// (off-diagonal Frobenius norm < 1e-12). Rows of `vectors` are eigenvectors,
// sorted by descending eigenvalue.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
};
SymmetricEigen jacobi_eigen(Matrix a);

struct PcaModel {
    std::vector<double> feature_means;
    std::vector<double> feature_stds;   // zero-variance features replaced by 1
    std::vector<int> zero_variance;     // warning flags, one per feature
    std::vector<double> eigenvalues;    // all, descending
    Matrix components;                  // n_components x n_features, rows orthonormal
    int n_components = 1;
};

// z-score standardization (population moments) + covariance eigendecomposition.
// Sign convention: the largest-magnitude entry of each component is positive.
PcaModel pca_fit(const Matrix& x, int n_components);
Matrix pca_transform(const PcaModel& model, const Matrix& x);

struct TreeNode {
    int feature = -1;        // -1 for leaves
    double threshold = 0.0;  // go left iff x[feature] <= threshold
    int left = -1;
    int right = -1;
    int count0 = 0;          // training samples per class at this node
    int count1 = 0;
    int leaf_class = -1;     // ties resolved toward the parent majority
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestModel {
    std::vector<DecisionTree> trees;
    int n_trees = 100;
    int max_depth = 10;
    int n_features = 0;
    std::uint64_t seed = 0;
    bool single_class = false;  // degenerate input flag
};

struct SplitSpec {
    std::vector<int> train_indices;  // ascending
    std::vector<int> test_indices;   // ascending
    int train_jammed = 0;
    int train_nonjammed = 0;
    int test_jammed = 0;
    int test_nonjammed = 0;
};

// Stratified seeded split with exact per-class train counts.
SplitSpec train_test_split(const std::vector<int>& labels, int train_jammed,
                           int train_nonjammed, std::uint64_t seed);

// Bootstrap-aggregated trees: ceil(sqrt(d)) candidate features per node,
// splits at midpoints of sorted unique values minimizing weighted Gini,
// stop on depth / purity / fewer than 2 samples.
ForestModel forest_fit(const Matrix& x, const std::vector<int>& y, int n_trees,
                       int max_depth, std::uint64_t seed);

int forest_predict(const ForestModel& model, std::span<const double> x);
// Fraction of trees voting jammed; majority vote with 0.5 -> non-jammed.
double forest_score(const ForestModel& model, std::span<const double> x);

// Versioned text model file (PCA + forest); load/save round-trips exactly.
void save_model(const PcaModel& pca, const ForestModel& forest,
                const std::string& path);
std::pair<PcaModel, ForestModel> load_model(const std::string& path);

}  // namespace jamsim::stationary
