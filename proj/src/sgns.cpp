#include "semspace/sgns.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semspace/errors.hpp"
#include "semspace/skipgram.hpp"

namespace semspace {

namespace {

double clipped_sigmoid(double x) {
    x = std::clamp(x, -30.0, 30.0);
    return 1.0 / (1.0 + std::exp(-x));
}

double log_sigmoid(double x) {
    return std::log(clipped_sigmoid(x));
}

} // namespace

NoiseTable::NoiseTable(const Vocabulary& vocab, double power) {
    cumulative_.resize(vocab.size());
    double total = 0.0;
    for (TermId id = 0; id < vocab.size(); ++id) {
        total += std::pow(static_cast<double>(vocab.freq(id)), power);
        cumulative_[id] = total;
    }
    if (total <= 0.0) {
        throw Error("noise table: vocabulary has no frequency mass");
    }
}

TermId NoiseTable::sample(Rng& rng) const {
    const double u = rng.uniform_real() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
    return static_cast<TermId>(std::min(idx, cumulative_.size() - 1));
}

double NoiseTable::probability(TermId id) const {
    const double prev = id == 0 ? 0.0 : cumulative_[id - 1];
    return (cumulative_[id] - prev) / cumulative_.back();
}

double sgns_step(std::span<double> center, std::span<double> context,
                 std::span<double* const> negatives, double lr) {
    const std::size_t dim = center.size();
    double dot_o = 0.0;
    for (std::size_t j = 0; j < dim; ++j) dot_o += context[j] * center[j];

    double loss = -log_sigmoid(dot_o);
    std::vector<double> center_grad(dim, 0.0);

    // Context output vector: coefficient sigma(s) - 1.
    const double g_o = clipped_sigmoid(dot_o) - 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
        center_grad[j] += g_o * context[j];
        context[j] -= lr * g_o * center[j];
    }

    for (double* negative : negatives) {
        double dot_n = 0.0;
        for (std::size_t j = 0; j < dim; ++j) dot_n += negative[j] * center[j];
        loss -= log_sigmoid(-dot_n);
        const double g_n = clipped_sigmoid(dot_n);
        for (std::size_t j = 0; j < dim; ++j) {
            center_grad[j] += g_n * negative[j];
            negative[j] -= lr * g_n * center[j];
        }
    }

    for (std::size_t j = 0; j < dim; ++j) center[j] -= lr * center_grad[j];
    return loss;
}

namespace {

// Drops tokens of a document per word2vec subsampling: keep probability
// sqrt(t/f) + t/f for corpus frequency fraction f.
std::vector<TermId> subsample_tokens(const std::vector<TermId>& tokens,
                                     const Vocabulary& vocab, double threshold,
                                     Rng& rng) {
    std::vector<TermId> kept;
    kept.reserve(tokens.size());
    const double total = static_cast<double>(vocab.total_tokens());
    for (TermId id : tokens) {
        const double f = static_cast<double>(vocab.freq(id)) / total;
        const double keep = std::sqrt(threshold / f) + threshold / f;
        if (keep >= 1.0 || rng.uniform_real() < keep) kept.push_back(id);
    }
    return kept;
}

} // namespace

EmbeddingSpace train_sgns(const std::vector<Document>& docs,
                          const Vocabulary& vocab, const SgnsConfig& config,
                          SgnsTrainStats* stats) {
    if (config.dim < 1) throw Error("sgns: dim must be >= 1");
    if (config.negatives < 1) throw Error("sgns: negatives must be >= 1");
    if (!(config.lr_start >= config.lr_end && config.lr_end > 0.0)) {
        throw Error("sgns: need lr_start >= lr_end > 0");
    }
    std::size_t tokens = 0;
    for (const auto& doc : docs) tokens += doc.token_ids.size();
    if (vocab.size() == 0 || docs.empty() || tokens == 0) {
        throw EmptyCorpus("train_sgns: no retained tokens");
    }
    if (vocab.size() < 2 && config.epochs > 0) {
        // With one term every noise draw would equal the context.
        throw EmptyCorpus("train_sgns: vocabulary needs at least 2 terms");
    }

    const std::size_t V = vocab.size();
    const std::size_t dim = config.dim;
    std::vector<double> input(V * dim);
    std::vector<double> output(V * dim, 0.0);
    Rng init_rng(derive_seed(config.seed, 0));
    for (std::size_t i = 0; i < input.size(); ++i) {
        input[i] = (init_rng.uniform_real() - 0.5) / static_cast<double>(dim);
    }

    const NoiseTable noise(vocab);
    const double total_expected =
        static_cast<double>(std::max<std::size_t>(config.epochs, 1)) *
        expected_pair_count(docs, config.window);

    if (stats) {
        stats->epoch_mean_loss.clear();
        stats->pairs_processed = 0;
    }

    std::uint64_t processed = 0;
    std::vector<double*> negatives(config.negatives);
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        Rng window_rng(derive_seed(config.seed, 1000 + epoch));
        Rng noise_rng(derive_seed(config.seed, 2000 + epoch));
        Rng subsample_rng(derive_seed(config.seed, 3000 + epoch));
        double epoch_loss = 0.0;
        std::uint64_t epoch_pairs = 0;

        const auto train_pair = [&](TermId center, TermId context) {
            const double progress =
                std::min(1.0, static_cast<double>(processed) / total_expected);
            const double lr =
                config.lr_start + (config.lr_end - config.lr_start) * progress;
            for (std::size_t i = 0; i < config.negatives; ++i) {
                TermId neg;
                do {
                    neg = noise.sample(noise_rng);
                } while (neg == context);
                negatives[i] = output.data() + static_cast<std::size_t>(neg) * dim;
            }
            epoch_loss += sgns_step(
                {input.data() + static_cast<std::size_t>(center) * dim, dim},
                {output.data() + static_cast<std::size_t>(context) * dim, dim},
                negatives, lr);
            ++processed;
            ++epoch_pairs;
        };

        for (const auto& doc : docs) {
            if (config.subsample > 0.0) {
                const std::vector<TermId> kept = subsample_tokens(
                    doc.token_ids, vocab, config.subsample, subsample_rng);
                skipgram_pairs(kept, config.window, window_rng, train_pair);
            } else {
                skipgram_pairs(doc.token_ids, config.window, window_rng, train_pair);
            }
        }
        if (stats) {
            stats->epoch_mean_loss.push_back(
                epoch_pairs > 0 ? epoch_loss / static_cast<double>(epoch_pairs)
                                : 0.0);
        }
    }
    if (stats) stats->pairs_processed = processed;

    std::ostringstream cfg;
    cfg << "dim=" << config.dim << " window=" << config.window
        << " negatives=" << config.negatives << " epochs=" << config.epochs
        << " lr=" << config.lr_start << "->" << config.lr_end
        << " subsample=" << config.subsample << " seed=" << config.seed
        << " vectors=input";
    return EmbeddingSpace(vocab, std::move(input), dim,
                          Provenance{ModelKind::SGNS, cfg.str()});
}

} // namespace semspace
