#include "semspace/lda.hpp"

#include <cmath>
#include <sstream>

#include "semspace/errors.hpp"

namespace semspace {

LdaState init_lda_state(const std::vector<Document>& docs, std::size_t n_terms,
                        std::size_t n_topics, double alpha, double beta,
                        Rng& rng) {
    if (n_topics < 1) throw Error("lda: topic count must be >= 1");
    if (alpha <= 0.0 || beta <= 0.0) throw Error("lda: priors must be positive");
    LdaState state;
    state.n_topics = n_topics;
    state.n_terms = n_terms;
    state.alpha = alpha;
    state.beta = beta;
    state.z.resize(docs.size());
    state.n_dk.assign(docs.size(), std::vector<std::int32_t>(n_topics, 0));
    state.n_wk.assign(n_terms, std::vector<std::int32_t>(n_topics, 0));
    state.n_k.assign(n_topics, 0);
    for (std::size_t d = 0; d < docs.size(); ++d) {
        const auto& tokens = docs[d].token_ids;
        state.z[d].resize(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const auto k = static_cast<std::uint16_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(n_topics) - 1));
            state.z[d][i] = k;
            ++state.n_dk[d][k];
            ++state.n_wk[tokens[i]][k];
            ++state.n_k[k];
        }
    }
    return state;
}

void gibbs_sweep(LdaState& state, const std::vector<Document>& docs, Rng& rng) {
    const std::size_t K = state.n_topics;
    const double v_beta = static_cast<double>(state.n_terms) * state.beta;
    std::vector<double> weight(K);
    for (std::size_t d = 0; d < docs.size(); ++d) {
        const auto& tokens = docs[d].token_ids;
        auto& n_dk = state.n_dk[d];
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const TermId w = tokens[i];
            const std::uint16_t old_k = state.z[d][i];
            --n_dk[old_k];
            --state.n_wk[w][old_k];
            --state.n_k[old_k];

            double total = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                weight[k] = (n_dk[k] + state.alpha) *
                            (state.n_wk[w][k] + state.beta) /
                            (static_cast<double>(state.n_k[k]) + v_beta);
                total += weight[k];
            }
            const double u = rng.uniform_real() * total;
            std::size_t new_k = K - 1;
            double cum = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                cum += weight[k];
                if (cum > u) {
                    new_k = k;
                    break;
                }
            }

            state.z[d][i] = static_cast<std::uint16_t>(new_k);
            ++n_dk[new_k];
            ++state.n_wk[w][new_k];
            ++state.n_k[new_k];
        }
    }
}

double log_likelihood(const LdaState& state, const std::vector<Document>& docs) {
    const double alpha = state.alpha;
    const double beta = state.beta;
    const double K = static_cast<double>(state.n_topics);
    const double V = static_cast<double>(state.n_terms);
    double ll = 0.0;
    // Document-topic side.
    for (std::size_t d = 0; d < docs.size(); ++d) {
        ll += std::lgamma(K * alpha) -
              std::lgamma(static_cast<double>(docs[d].token_ids.size()) + K * alpha);
        for (std::size_t k = 0; k < state.n_topics; ++k) {
            ll += std::lgamma(state.n_dk[d][k] + alpha) - std::lgamma(alpha);
        }
    }
    // Topic-word side.
    for (std::size_t k = 0; k < state.n_topics; ++k) {
        ll += std::lgamma(V * beta) -
              std::lgamma(static_cast<double>(state.n_k[k]) + V * beta);
        for (std::size_t w = 0; w < state.n_terms; ++w) {
            ll += std::lgamma(state.n_wk[w][k] + beta) - std::lgamma(beta);
        }
    }
    return ll;
}

std::vector<double> lda_term_vectors(const LdaState& state) {
    const std::size_t K = state.n_topics;
    std::vector<double> matrix(state.n_terms * K);
    for (std::size_t w = 0; w < state.n_terms; ++w) {
        double n_w = 0.0;
        for (std::size_t k = 0; k < K; ++k) n_w += state.n_wk[w][k];
        const double denom = n_w + static_cast<double>(K) * state.beta;
        for (std::size_t k = 0; k < K; ++k) {
            matrix[w * K + k] = (state.n_wk[w][k] + state.beta) / denom;
        }
    }
    return matrix;
}

EmbeddingSpace train_lda(const std::vector<Document>& docs,
                         const Vocabulary& vocab, const LdaConfig& config) {
    if (config.sweeps < 1) throw Error("lda: sweeps must be >= 1");
    std::size_t tokens = 0;
    for (const auto& doc : docs) tokens += doc.token_ids.size();
    if (docs.empty() || tokens == 0) {
        throw EmptyCorpus("train_lda: no retained tokens");
    }
    const double alpha = config.effective_alpha();
    Rng rng(config.seed);
    LdaState state = init_lda_state(docs, vocab.size(), config.topics, alpha,
                                    config.beta, rng);
    for (std::size_t s = 0; s < config.sweeps; ++s) {
        gibbs_sweep(state, docs, rng);
    }
    std::ostringstream cfg;
    cfg << "K=" << config.topics << " alpha=" << alpha << " beta=" << config.beta
        << " sweeps=" << config.sweeps << " seed=" << config.seed;
    return EmbeddingSpace(vocab, lda_term_vectors(state), config.topics,
                          Provenance{ModelKind::LDA, cfg.str()});
}

} // namespace semspace
