#include "semspace/skipgram.hpp"

#include <algorithm>

#include "semspace/errors.hpp"

namespace semspace {

void skipgram_pairs(std::span<const TermId> tokens, int window, Rng& rng,
                    const std::function<void(TermId, TermId)>& emit,
                    bool dynamic_window) {
    if (window < 1) throw Error("skipgram: window must be >= 1");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(tokens.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::ptrdiff_t b =
            dynamic_window ? static_cast<std::ptrdiff_t>(rng.uniform_int(1, window))
                           : window;
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - b);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, i + b);
        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
            if (j == i) continue;
            emit(tokens[i], tokens[j]);
        }
    }
}

void skipgram_stream(const std::vector<Document>& docs, int window, Rng& rng,
                     const std::function<void(TermId, TermId)>& emit,
                     bool dynamic_window) {
    for (const auto& doc : docs) {
        skipgram_pairs(doc.token_ids, window, rng, emit, dynamic_window);
    }
}

std::vector<SkipGramPair> collect_skipgram_pairs(const std::vector<Document>& docs,
                                                 int window, Rng& rng,
                                                 bool dynamic_window) {
    std::vector<SkipGramPair> pairs;
    skipgram_stream(docs, window, rng,
                    [&](TermId c, TermId x) { pairs.push_back({c, x}); },
                    dynamic_window);
    return pairs;
}

double expected_pair_count(const std::vector<Document>& docs, int window) {
    if (window < 1) throw Error("skipgram: window must be >= 1");
    double total = 0.0;
    for (const auto& doc : docs) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(doc.token_ids.size());
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::ptrdiff_t b = 1; b <= window; ++b) {
                sum += static_cast<double>(std::min(i, b) +
                                           std::min(n - 1 - i, b));
            }
            total += sum / static_cast<double>(window);
        }
    }
    return total;
}

} // namespace semspace
