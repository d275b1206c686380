#ifndef SEMSPACE_SKIPGRAM_HPP
#define SEMSPACE_SKIPGRAM_HPP

#include <functional>
#include <span>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/rng.hpp"

namespace semspace {

struct SkipGramPair {
    TermId center;
    TermId context;
};

// Emits (center, context) pairs for one document.
//
// Draw protocol (tests replay it): positions are visited left to right and
// ONE window size b = rng.uniform_int(1, window) is drawn per position,
// even when the position can emit no pair. Pairs for position i are emitted
// in ascending j order over j in [i-b, i+b], j != i, clipped to the
// document. With dynamic_window=false, b is pinned to `window` and no
// draw is consumed (pair multiset is then symmetric under swap).
void skipgram_pairs(std::span<const TermId> tokens, int window, Rng& rng,
                    const std::function<void(TermId, TermId)>& emit,
                    bool dynamic_window = true);

// Document-order stream over a corpus.
void skipgram_stream(const std::vector<Document>& docs, int window, Rng& rng,
                     const std::function<void(TermId, TermId)>& emit,
                     bool dynamic_window = true);

// Convenience for tests and small corpora.
std::vector<SkipGramPair> collect_skipgram_pairs(const std::vector<Document>& docs,
                                                 int window, Rng& rng,
                                                 bool dynamic_window = true);

// Expected pair count under the uniform 1..window draw, summed over all
// positions of all documents. Exact; used for learning-rate schedules.
double expected_pair_count(const std::vector<Document>& docs, int window);

} // namespace semspace

#endif
