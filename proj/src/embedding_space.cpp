#include "semspace/embedding_space.hpp"

#include <algorithm>
#include <cmath>

#include "semspace/errors.hpp"

namespace semspace {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::LSA: return "LSA";
        case ModelKind::LDA: return "LDA";
        case ModelKind::SGNS: return "SGNS";
        case ModelKind::Pretrained: return "Pretrained";
    }
    return "?";
}

EmbeddingSpace::EmbeddingSpace(Vocabulary vocab, std::vector<double> matrix,
                               std::size_t dim, Provenance provenance)
    : vocab_(std::move(vocab)), matrix_(std::move(matrix)), dim_(dim),
      provenance_(std::move(provenance)) {
    if (dim_ < 1) throw Error("embedding space: dim must be >= 1");
    if (matrix_.size() != vocab_.size() * dim_) {
        throw Error("embedding space: matrix size does not match V x dim");
    }
    inv_norms_.resize(vocab_.size());
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double v = matrix_[i * dim_ + j];
            sq += v * v;
        }
        inv_norms_[i] = sq > 0.0 ? 1.0 / std::sqrt(sq) : 0.0;
    }
}

namespace {

// Ordering for neighbor candidates: higher score first, then lower id.
bool neighbor_before(const Neighbor& a, const Neighbor& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
}

} // namespace

NeighborList top_k(const EmbeddingSpace& space, TermId query, std::size_t k) {
    if (k < 1) throw Error("top_k: k must be >= 1");
    const std::size_t V = space.size();
    const std::span<const double> q = space.vector_of(query);
    const double q_inv = space.inv_norm(query);

    // Bounded selection: `worst` tracks the heap root (the weakest kept
    // neighbor) once k candidates are in.
    std::vector<Neighbor> heap;
    heap.reserve(k + 1);
    const auto heap_cmp = [](const Neighbor& a, const Neighbor& b) {
        return neighbor_before(a, b); // max-first ordering -> min-heap root
    };
    for (TermId id = 0; id < V; ++id) {
        if (id == query) continue;
        const double r_inv = space.inv_norm(id);
        if (r_inv == 0.0) continue;
        double dot = 0.0;
        const std::span<const double> r = space.vector_of(id);
        for (std::size_t j = 0; j < q.size(); ++j) dot += q[j] * r[j];
        const Neighbor candidate{id, dot * q_inv * r_inv};
        if (heap.size() < k) {
            heap.push_back(candidate);
            std::push_heap(heap.begin(), heap.end(), heap_cmp);
        } else if (neighbor_before(candidate, heap.front())) {
            std::pop_heap(heap.begin(), heap.end(), heap_cmp);
            heap.back() = candidate;
            std::push_heap(heap.begin(), heap.end(), heap_cmp);
        }
    }
    // sort_heap leaves the range ascending under heap_cmp, i.e. best first.
    std::sort_heap(heap.begin(), heap.end(), heap_cmp);
    return NeighborList{query, std::move(heap)};
}

NeighborList top_k(const EmbeddingSpace& space, const std::string& term,
                   std::size_t k) {
    const auto id = space.vocab().id_of(term);
    if (!id) throw UnknownTerm("unknown term: " + term);
    return top_k(space, *id, k);
}

} // namespace semspace
