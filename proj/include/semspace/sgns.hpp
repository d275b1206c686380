#ifndef SEMSPACE_SGNS_HPP
#define SEMSPACE_SGNS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/embedding_space.hpp"
#include "semspace/rng.hpp"

namespace semspace {

struct SgnsConfig {
    std::size_t dim = 300;
    int window = 5;
    std::size_t negatives = 5;
    std::size_t epochs = 5;
    double lr_start = 0.025;
    double lr_end = 0.0001;
    double subsample = 0.0; // frequent-token subsampling threshold, 0 = off
    std::uint64_t seed = 1;
};

// Unigram noise distribution with probabilities proportional to
// freq(w)^0.75; sampled by binary search on the cumulative table.
class NoiseTable {
public:
    explicit NoiseTable(const Vocabulary& vocab, double power = 0.75);

    TermId sample(Rng& rng) const;
    double probability(TermId id) const;
    std::size_t size() const { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;
};

// One stochastic gradient step on
//   loss = -ln s(u_o . v_c) - sum_i ln s(-u_i . v_c),  s(x) = 1/(1+e^-x).
// The center ("input") vector and the context/negative ("output") vectors
// are updated in place from their pre-step values; dot products are clipped
// to [-30, 30] before exponentiation. Returns the pre-step loss.
double sgns_step(std::span<double> center, std::span<double> context,
                 std::span<double* const> negatives, double lr);

struct SgnsTrainStats {
    std::vector<double> epoch_mean_loss;
    std::uint64_t pairs_processed = 0;
};

// Skip-gram with negative sampling over the pair stream. Input vectors are
// initialized uniform in [-0.5/dim, 0.5/dim], output vectors start at zero,
// negatives are redrawn when they hit the true context id, and the learning
// rate decays linearly from lr_start to lr_end over the expected pair
// count. Single-threaded reference: bitwise reproducible for a fixed seed.
// The returned space holds the input vectors.
EmbeddingSpace train_sgns(const std::vector<Document>& docs,
                          const Vocabulary& vocab, const SgnsConfig& config,
                          SgnsTrainStats* stats = nullptr);

} // namespace semspace

#endif
