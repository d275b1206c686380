#include "semspace/lsa.hpp"

#include <algorithm>
#include <sstream>

#include "semspace/errors.hpp"
#include "semspace/rng.hpp"

namespace semspace {

namespace {

// Y = A * X, CSR rows in fixed order so results are thread-count independent.
Eigen::MatrixXd csr_times_dense(const SparseCountMatrix& a,
                                const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.n_rows),
                                              x.cols());
    for (std::size_t t = 0; t < a.n_rows; ++t) {
        for (std::size_t i = a.row_ptr[t]; i < a.row_ptr[t + 1]; ++i) {
            y.row(static_cast<Eigen::Index>(t)) +=
                a.values[i] * x.row(static_cast<Eigen::Index>(a.col_idx[i]));
        }
    }
    return y;
}

// Z = A^T * X.
Eigen::MatrixXd csr_transpose_times_dense(const SparseCountMatrix& a,
                                          const Eigen::MatrixXd& x) {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.n_cols),
                                              x.cols());
    for (std::size_t t = 0; t < a.n_rows; ++t) {
        for (std::size_t i = a.row_ptr[t]; i < a.row_ptr[t + 1]; ++i) {
            z.row(static_cast<Eigen::Index>(a.col_idx[i])) +=
                a.values[i] * x.row(static_cast<Eigen::Index>(t));
        }
    }
    return z;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& y) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

} // namespace

SvdResult randomized_svd(const SparseCountMatrix& m, std::size_t k,
                         std::size_t power_iters, std::size_t oversample,
                         std::uint64_t seed) {
    const Eigen::Index rows = static_cast<Eigen::Index>(m.n_rows);
    const Eigen::Index cols = static_cast<Eigen::Index>(m.n_cols);
    if (rows == 0 || cols == 0 || m.nnz() == 0) {
        throw EmptyCorpus("randomized_svd: empty matrix");
    }
    const Eigen::Index max_rank = std::min(rows, cols);
    if (k < 1 || static_cast<Eigen::Index>(k) > max_rank) {
        throw RankTooLarge("rank " + std::to_string(k) + " exceeds min(V, D) = " +
                           std::to_string(max_rank));
    }
    const Eigen::Index sketch =
        std::min<Eigen::Index>(static_cast<Eigen::Index>(k + oversample), max_rank);

    Rng rng(derive_seed(seed, 0x5fa));
    Eigen::MatrixXd omega(cols, sketch);
    for (Eigen::Index i = 0; i < cols; ++i) {
        for (Eigen::Index j = 0; j < sketch; ++j) {
            omega(i, j) = rng.normal();
        }
    }

    Eigen::MatrixXd q = orthonormalize(csr_times_dense(m, omega));
    for (std::size_t it = 0; it < power_iters; ++it) {
        const Eigen::MatrixXd z = orthonormalize(csr_transpose_times_dense(m, q));
        q = orthonormalize(csr_times_dense(m, z));
    }

    // B = Q^T A computed as (A^T Q)^T, then the small dense SVD.
    const Eigen::MatrixXd bt = csr_transpose_times_dense(m, q); // D x sketch
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(bt.transpose(),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);

    SvdResult result;
    const Eigen::Index kk = static_cast<Eigen::Index>(k);
    result.u = (q * svd.matrixU()).leftCols(kk);
    result.singular_values = svd.singularValues().head(kk);
    result.v = svd.matrixV().leftCols(kk);
    return result;
}

EmbeddingSpace train_lsa(const SparseCountMatrix& m, const Vocabulary& vocab,
                         const LsaConfig& config) {
    if (vocab.size() != m.n_rows) {
        throw Error("train_lsa: vocabulary size does not match matrix rows");
    }
    const SvdResult svd = randomized_svd(m, config.rank, config.power_iters,
                                         config.oversample, config.seed);
    const std::size_t dim = config.rank;
    std::vector<double> matrix(m.n_rows * dim);
    for (std::size_t t = 0; t < m.n_rows; ++t) {
        for (std::size_t j = 0; j < dim; ++j) {
            matrix[t * dim + j] = svd.u(static_cast<Eigen::Index>(t),
                                        static_cast<Eigen::Index>(j)) *
                                  svd.singular_values(static_cast<Eigen::Index>(j));
        }
    }
    std::ostringstream cfg;
    cfg << "k=" << config.rank << " q=" << config.power_iters
        << " p=" << config.oversample << " seed=" << config.seed << " weighting="
        << (m.weighting == Weighting::TfIdf ? "tfidf" : "raw");
    return EmbeddingSpace(vocab, std::move(matrix), dim,
                          Provenance{ModelKind::LSA, cfg.str()});
}

} // namespace semspace
