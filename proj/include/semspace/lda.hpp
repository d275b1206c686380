#ifndef SEMSPACE_LDA_HPP
#define SEMSPACE_LDA_HPP

#include <cstdint>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/embedding_space.hpp"
#include "semspace/rng.hpp"

namespace semspace {

struct LdaConfig {
    std::size_t topics = 300;
    double alpha = -1.0; // <= 0 means the 50/K convention
    double beta = 0.01;
    std::size_t sweeps = 200;
    std::uint64_t seed = 1;

    double effective_alpha() const {
        return alpha > 0.0 ? alpha : 50.0 / static_cast<double>(topics);
    }
};

// Collapsed Gibbs state. After every single-token resample:
//   sum_k n_dk[d][k] == len(d)  and  sum_w n_wk[w][k] == n_k[k].
struct LdaState {
    std::size_t n_topics = 0;
    std::size_t n_terms = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<std::vector<std::uint16_t>> z; // per-doc token assignments
    std::vector<std::vector<std::int32_t>> n_dk;
    std::vector<std::vector<std::int32_t>> n_wk;
    std::vector<std::int64_t> n_k;
};

// Uniform-random topic assignment per token, counts accumulated to match.
// Draw order: documents in order, tokens left to right, one
// rng.uniform_int(0, K-1) per token.
LdaState init_lda_state(const std::vector<Document>& docs, std::size_t n_terms,
                        std::size_t n_topics, double alpha, double beta,
                        Rng& rng);

// One full sweep in strict (document, token) order. Each token's current
// assignment is decremented before sampling
//   p(z = k) ~ (n_dk + alpha) * (n_wk + beta) / (n_k + V*beta)
// and re-incremented after. One rng.uniform_real() per token; the topic is
// the first k whose cumulative weight exceeds u * total.
void gibbs_sweep(LdaState& state, const std::vector<Document>& docs, Rng& rng);

// Joint log p(w, z | alpha, beta) of the current assignment.
double log_likelihood(const LdaState& state, const std::vector<Document>& docs);

// Smoothed p(topic | word): ((n_wk + beta) / (n_w + K*beta))_k, each row
// summing to 1.
std::vector<double> lda_term_vectors(const LdaState& state);

// Runs `sweeps` Gibbs sweeps from a seeded random initialization and
// exposes the per-term topic distributions as an embedding space.
EmbeddingSpace train_lda(const std::vector<Document>& docs,
                         const Vocabulary& vocab, const LdaConfig& config);

} // namespace semspace

#endif
