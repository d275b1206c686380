#ifndef SEMSPACE_EVALUATE_HPP
#define SEMSPACE_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "semspace/embedding_space.hpp"
#include "semspace/relations.hpp"

namespace semspace {

// How the input term set S is chosen. With explicit_terms set they are
// used as-is (terms missing from the vocabulary are skipped); otherwise
// random_n terms are drawn, seeded, from the distinct relation heads that
// are in the vocabulary. allow_list, when present, restricts candidates
// either way (stand-in for the "nouns only" filter).
struct SamplingSpec {
    std::optional<std::vector<std::string>> explicit_terms;
    std::size_t random_n = 100;
    std::optional<std::unordered_set<std::string>> allow_list;
    std::uint64_t seed = 1;
};

struct EvalOptions {
    std::size_t k = 10;
    // Reproduced = tail in top-k of head; symmetric mode also accepts
    // head in top-k of tail.
    bool symmetric = true;
    // Default mode drops instances with an out-of-vocabulary endpoint from
    // the metric denominators (reported as oov_skipped); strict keeps them.
    bool strict_oov = false;
};

struct CategoryStats {
    std::uint64_t reproduced = 0;   // the per-category "N"
    std::uint64_t total = 0;        // overall RC
    double r_prec = 0.0;
    double r_rec = 0.0;
    bool r_prec_defined = true;

    bool operator==(const CategoryStats&) const = default;
};

// Overall and per-category reproduction metrics for one space.
struct EvalReport {
    std::string space_name;
    std::uint64_t rc = 0;        // reproduced relation instances
    std::uint64_t tr = 0;        // sample terms with >= 1 reproduced instance
    double ssric = 0.0;          // TR / N
    std::uint64_t retrieved = 0; // neighbor hits participating in any relation
    double r_prec = 0.0;         // RC / retrieved
    double r_rec = 0.0;          // RC / N
    bool r_prec_defined = true;  // false when retrieved == 0
    std::uint64_t n_relations = 0;  // the denominator N
    std::uint64_t oov_skipped = 0;
    std::size_t k = 10;
    std::uint64_t seed = 0;
    bool symmetric = true;
    bool strict_oov = false;
    std::vector<std::string> sample_terms; // sorted
    std::map<RelationCategory, CategoryStats> per_category; // all ten

    bool operator==(const EvalReport&) const = default;
};

// Replays relation instances through the space: samples S, retrieves
// top_k(t) for every t in S, and counts reproduced instances overall and
// per category. Throws EmptySample when S ends up empty and
// KExceedsVocabulary when k > V-1.
EvalReport evaluate(const EmbeddingSpace& space,
                    const std::vector<RelationInstance>& relations,
                    const EvalOptions& options, const SamplingSpec& sampling,
                    const std::string& space_name);

} // namespace semspace

#endif
