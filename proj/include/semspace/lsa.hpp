#ifndef SEMSPACE_LSA_HPP
#define SEMSPACE_LSA_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "semspace/embedding_space.hpp"
#include "semspace/sparse_matrix.hpp"

namespace semspace {

struct LsaConfig {
    std::size_t rank = 300;
    std::size_t power_iters = 4;
    std::size_t oversample = 10;
    std::uint64_t seed = 1;
};

struct SvdResult {
    Eigen::MatrixXd u;              // n_rows x k, orthonormal columns
    Eigen::VectorXd singular_values; // k, nonincreasing
    Eigen::MatrixXd v;              // n_cols x k, orthonormal columns
};

// Rank-k truncated SVD by randomized range finding (Halko et al. 2011):
// Gaussian sketch of width k+p, q power iterations re-orthonormalized via
// Householder QR each step, then a dense SVD of the projected matrix.
// Deterministic for a fixed seed; all accumulation in double precision.
SvdResult randomized_svd(const SparseCountMatrix& m, std::size_t k,
                         std::size_t power_iters, std::size_t oversample,
                         std::uint64_t seed);

// LSA term vectors: row t of U_k * diag(sigma_k). Throws RankTooLarge when
// rank exceeds min(V, D) and EmptyCorpus on an empty matrix.
EmbeddingSpace train_lsa(const SparseCountMatrix& m, const Vocabulary& vocab,
                         const LsaConfig& config);

} // namespace semspace

#endif
