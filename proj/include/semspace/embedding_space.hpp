#ifndef SEMSPACE_EMBEDDING_SPACE_HPP
#define SEMSPACE_EMBEDDING_SPACE_HPP

#include <span>
#include <string>
#include <vector>

#include "semspace/vocabulary.hpp"

namespace semspace {

enum class ModelKind { LSA, LDA, SGNS, Pretrained };

const char* model_kind_name(ModelKind kind);

struct Provenance {
    ModelKind kind = ModelKind::Pretrained;
    std::string config; // effective configuration, "key=value ..." summary
};

// Ordered neighbor list for one query term. Scores are cosines, the query
// itself is excluded, and ties are broken by ascending term id.
struct Neighbor {
    TermId id;
    double score;
};

struct NeighborList {
    TermId query;
    std::vector<Neighbor> neighbors;
};

// A V x dim matrix of per-term vectors plus the vocabulary it indexes.
// Immutable after construction; concurrent queries are safe.
class EmbeddingSpace {
public:
    EmbeddingSpace() = default;
    EmbeddingSpace(Vocabulary vocab, std::vector<double> matrix, std::size_t dim,
                   Provenance provenance);

    std::size_t size() const { return vocab_.size(); }
    std::size_t dim() const { return dim_; }
    const Vocabulary& vocab() const { return vocab_; }
    const Provenance& provenance() const { return provenance_; }
    const std::vector<double>& matrix() const { return matrix_; }

    std::span<const double> vector_of(TermId id) const {
        return {matrix_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }
    // 1/||v|| for row id, or 0 for an all-zero row.
    double inv_norm(TermId id) const { return inv_norms_[id]; }

private:
    Vocabulary vocab_;
    std::vector<double> matrix_; // row-major V x dim
    std::vector<double> inv_norms_;
    std::size_t dim_ = 0;
    Provenance provenance_;
};

// Exact top-k by cosine similarity over all other terms. Zero-norm rows are
// excluded as candidates (their cosine is defined as 0). Ties break by
// ascending term id. Returns up to min(k, V-1) neighbors; throws
// UnknownTerm when the query is not in the vocabulary.
NeighborList top_k(const EmbeddingSpace& space, TermId query, std::size_t k);
NeighborList top_k(const EmbeddingSpace& space, const std::string& term,
                   std::size_t k);

} // namespace semspace

#endif
