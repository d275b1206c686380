#ifndef SEMSPACE_TEST_ORACLE_HPP
#define SEMSPACE_TEST_ORACLE_HPP

// Independent brute-force implementations of neighbor retrieval and the
// relation-reproduction metrics. Straight-line code over the full cosine
// matrix, kept free of the library's top_k/evaluate logic on purpose.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semspace/embedding_space.hpp"
#include "semspace/relations.hpp"

namespace oracle {

struct ScoredTerm {
    semspace::TermId id;
    double score;
};

// Full cosine matrix, the same arithmetic order as a plain dot product.
inline std::vector<std::vector<double>> cosine_matrix(
    const semspace::EmbeddingSpace& space) {
    const std::size_t v = space.size();
    const std::size_t dim = space.dim();
    std::vector<double> norms(v, 0.0);
    for (std::size_t i = 0; i < v; ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double x = space.matrix()[i * dim + j];
            sq += x * x;
        }
        norms[i] = std::sqrt(sq);
    }
    std::vector<std::vector<double>> cos(v, std::vector<double>(v, 0.0));
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = 0; b < v; ++b) {
            if (norms[a] == 0.0 || norms[b] == 0.0) {
                cos[a][b] = 0.0;
                continue;
            }
            double dot = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                dot += space.matrix()[a * dim + j] * space.matrix()[b * dim + j];
            }
            cos[a][b] = dot * (1.0 / norms[a]) * (1.0 / norms[b]);
        }
    }
    return cos;
}

// Exhaustive top-k: every other nonzero-norm term scored, stable-sorted by
// (score desc, id asc).
inline std::vector<ScoredTerm> brute_force_top_k(
    const semspace::EmbeddingSpace& space, semspace::TermId query,
    std::size_t k) {
    const std::size_t v = space.size();
    const std::size_t dim = space.dim();
    const auto row_norm = [&](semspace::TermId id) {
        double sq = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double x = space.matrix()[id * dim + j];
            sq += x * x;
        }
        return std::sqrt(sq);
    };
    const double qn = row_norm(query);
    std::vector<ScoredTerm> scored;
    for (semspace::TermId id = 0; id < v; ++id) {
        if (id == query) continue;
        const double rn = row_norm(id);
        if (rn == 0.0) continue;
        double dot = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            dot += space.matrix()[query * dim + j] * space.matrix()[id * dim + j];
        }
        const double score = qn == 0.0 ? 0.0 : dot * (1.0 / qn) * (1.0 / rn);
        scored.push_back({id, score});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const ScoredTerm& a, const ScoredTerm& b) {
                         if (a.score != b.score) return a.score > b.score;
                         return a.id < b.id;
                     });
    if (scored.size() > k) scored.resize(k);
    return scored;
}

struct CategoryCounts {
    std::uint64_t reproduced = 0;
    std::uint64_t retrieved = 0;
    std::uint64_t n = 0;
};

struct EvalCounts {
    std::uint64_t rc = 0;
    std::uint64_t tr = 0;
    std::uint64_t retrieved = 0;
    std::uint64_t n_relations = 0;
    std::uint64_t oov_skipped = 0;
    std::array<CategoryCounts, semspace::kNumCategories> per_category{};
};

// Recomputes every metric from scratch for an explicit sample term list.
inline EvalCounts brute_force_eval(
    const semspace::EmbeddingSpace& space,
    const std::vector<semspace::RelationInstance>& relations,
    const std::vector<std::string>& sample_terms, std::size_t k,
    bool symmetric, bool strict_oov) {
    using semspace::TermId;
    const auto& vocab = space.vocab();

    EvalCounts out;

    // Neighbor sets per sampled term.
    std::map<std::string, std::set<TermId>> neighbors;
    for (const auto& term : sample_terms) {
        const auto id = vocab.id_of(term);
        if (!id) continue;
        std::set<TermId> ids;
        for (const auto& s : brute_force_top_k(space, *id, k)) ids.insert(s.id);
        neighbors[term] = std::move(ids);
    }

    const auto reproduced_via = [&](const std::string& queried,
                                    const std::string& partner) {
        const auto it = neighbors.find(queried);
        if (it == neighbors.end()) return false;
        const auto partner_id = vocab.id_of(partner);
        return partner_id && it->second.count(*partner_id) > 0;
    };

    std::set<std::string> terms_with_hit;
    std::set<std::string> participants;
    std::array<std::set<std::string>, semspace::kNumCategories> participants_cat;
    for (const auto& r : relations) {
        const bool in_vocab = vocab.contains(r.head) && vocab.contains(r.tail);
        if (!in_vocab) ++out.oov_skipped;
        const bool counted = in_vocab || strict_oov;
        if (!counted) continue;
        const auto c = static_cast<std::size_t>(r.category);
        ++out.n_relations;
        ++out.per_category[c].n;
        if (vocab.contains(r.head)) {
            participants.insert(r.head);
            participants_cat[c].insert(r.head);
        }
        if (vocab.contains(r.tail)) {
            participants.insert(r.tail);
            participants_cat[c].insert(r.tail);
        }
        if (!in_vocab) continue;
        bool reproduced = false;
        if (reproduced_via(r.head, r.tail)) {
            reproduced = true;
            terms_with_hit.insert(r.head);
        }
        if (symmetric && reproduced_via(r.tail, r.head)) {
            reproduced = true;
            terms_with_hit.insert(r.tail);
        }
        if (reproduced) {
            ++out.rc;
            ++out.per_category[c].reproduced;
        }
    }
    out.tr = terms_with_hit.size();

    for (const auto& [term, ids] : neighbors) {
        for (TermId id : ids) {
            const std::string& token = vocab.token(id);
            if (participants.count(token)) ++out.retrieved;
            for (std::size_t c = 0; c < semspace::kNumCategories; ++c) {
                if (participants_cat[c].count(token)) ++out.per_category[c].retrieved;
            }
        }
    }
    return out;
}

} // namespace oracle

#endif
