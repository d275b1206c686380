#include "semspace/evaluate.hpp"

#include <algorithm>
#include <array>

#include "semspace/errors.hpp"
#include "semspace/rng.hpp"

namespace semspace {

namespace {

// Instance with endpoints resolved against the vocabulary where possible.
struct ResolvedInstance {
    std::optional<TermId> head;
    std::optional<TermId> tail;
    RelationCategory category;

    bool fully_resolved() const { return head.has_value() && tail.has_value(); }
};

// Seeded draw of n distinct terms: candidates sorted lexicographically,
// partial Fisher-Yates shuffle, first n taken.
std::vector<std::string> draw_sample(std::vector<std::string> candidates,
                                     std::size_t n, std::uint64_t seed) {
    std::sort(candidates.begin(), candidates.end());
    Rng rng(derive_seed(seed, 7));
    const std::size_t take = std::min(n, candidates.size());
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_u64(
                                      candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(take);
    return candidates;
}

} // namespace

EvalReport evaluate(const EmbeddingSpace& space,
                    const std::vector<RelationInstance>& relations,
                    const EvalOptions& options, const SamplingSpec& sampling,
                    const std::string& space_name) {
    if (relations.empty()) throw Error("evaluate: relation list is empty");
    if (options.k < 1) throw Error("evaluate: k must be >= 1");
    const std::size_t V = space.size();
    if (V == 0 || options.k > V - 1) {
        throw KExceedsVocabulary("evaluate: k=" + std::to_string(options.k) +
                                 " exceeds V-1=" +
                                 std::to_string(V == 0 ? 0 : V - 1));
    }
    const Vocabulary& vocab = space.vocab();

    // Instances counted in the denominators: fully in-vocabulary ones, plus
    // (in strict mode) those with an out-of-vocabulary endpoint.
    std::vector<ResolvedInstance> counted;
    std::uint64_t oov_skipped = 0;
    for (const auto& r : relations) {
        ResolvedInstance inst{vocab.id_of(r.head), vocab.id_of(r.tail), r.category};
        if (!inst.fully_resolved()) {
            ++oov_skipped;
            if (!options.strict_oov) continue;
        }
        counted.push_back(inst);
    }
    const std::uint64_t n_relations = counted.size();

    // Sample term set S.
    std::vector<std::string> sample;
    if (sampling.explicit_terms) {
        std::unordered_set<std::string> dedup;
        for (const auto& term : *sampling.explicit_terms) {
            if (!vocab.contains(term)) continue;
            if (sampling.allow_list && sampling.allow_list->count(term) == 0) continue;
            if (dedup.insert(term).second) sample.push_back(term);
        }
    } else {
        std::unordered_set<std::string> heads;
        for (const auto& r : relations) {
            if (!vocab.contains(r.head)) continue;
            if (sampling.allow_list && sampling.allow_list->count(r.head) == 0) continue;
            heads.insert(r.head);
        }
        sample = draw_sample({heads.begin(), heads.end()}, sampling.random_n,
                             sampling.seed);
    }
    std::sort(sample.begin(), sample.end());
    if (sample.empty()) {
        throw EmptySample("evaluate: no usable sample terms");
    }

    // Neighbor lists for every sampled term.
    std::vector<std::vector<TermId>> neighbor_ids(sample.size());
    std::vector<bool> in_sample(V, false);
    std::vector<std::size_t> sample_index(V, 0);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const TermId id = *vocab.id_of(sample[i]);
        in_sample[id] = true;
        sample_index[id] = i;
        const NeighborList list = top_k(space, id, options.k);
        neighbor_ids[i].reserve(list.neighbors.size());
        for (const auto& nb : list.neighbors) neighbor_ids[i].push_back(nb.id);
    }
    const auto in_top_k = [&](std::size_t sample_i, TermId id) {
        const auto& ids = neighbor_ids[sample_i];
        return std::find(ids.begin(), ids.end(), id) != ids.end();
    };

    // Reproduction per instance; TR credit goes to the queried side.
    std::array<std::uint64_t, kNumCategories> rc_cat{};
    std::array<std::uint64_t, kNumCategories> n_cat{};
    std::vector<bool> term_hit(sample.size(), false);
    std::uint64_t rc = 0;
    for (const auto& inst : counted) {
        ++n_cat[static_cast<std::size_t>(inst.category)];
        if (!inst.fully_resolved()) continue;
        bool reproduced = false;
        if (in_sample[*inst.head] && in_top_k(sample_index[*inst.head], *inst.tail)) {
            reproduced = true;
            term_hit[sample_index[*inst.head]] = true;
        }
        if (options.symmetric && in_sample[*inst.tail] &&
            in_top_k(sample_index[*inst.tail], *inst.head)) {
            reproduced = true;
            term_hit[sample_index[*inst.tail]] = true;
        }
        if (reproduced) {
            ++rc;
            ++rc_cat[static_cast<std::size_t>(inst.category)];
        }
    }
    std::uint64_t tr = 0;
    for (bool hit : term_hit) tr += hit ? 1 : 0;

    // Retrieved: (t, n) neighbor hits whose n participates in a counted
    // instance, overall and per category.
    std::vector<bool> participates(V, false);
    std::array<std::vector<bool>, kNumCategories> participates_cat;
    participates_cat.fill(std::vector<bool>(V, false));
    for (const auto& inst : counted) {
        auto& cat = participates_cat[static_cast<std::size_t>(inst.category)];
        if (inst.head) {
            participates[*inst.head] = true;
            cat[*inst.head] = true;
        }
        if (inst.tail) {
            participates[*inst.tail] = true;
            cat[*inst.tail] = true;
        }
    }
    std::uint64_t retrieved = 0;
    std::array<std::uint64_t, kNumCategories> retrieved_cat{};
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (TermId nb : neighbor_ids[i]) {
            if (participates[nb]) ++retrieved;
            for (std::size_t c = 0; c < kNumCategories; ++c) {
                if (participates_cat[c][nb]) ++retrieved_cat[c];
            }
        }
    }

    EvalReport report;
    report.space_name = space_name;
    report.rc = rc;
    report.tr = tr;
    report.n_relations = n_relations;
    report.oov_skipped = oov_skipped;
    report.retrieved = retrieved;
    report.ssric = n_relations > 0 ? static_cast<double>(tr) /
                                         static_cast<double>(n_relations)
                                   : 0.0;
    report.r_prec_defined = retrieved > 0;
    report.r_prec = retrieved > 0 ? static_cast<double>(rc) /
                                        static_cast<double>(retrieved)
                                  : 0.0;
    report.r_rec = n_relations > 0 ? static_cast<double>(rc) /
                                         static_cast<double>(n_relations)
                                   : 0.0;
    report.k = options.k;
    report.seed = sampling.seed;
    report.symmetric = options.symmetric;
    report.strict_oov = options.strict_oov;
    report.sample_terms = std::move(sample);
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        CategoryStats stats;
        stats.reproduced = rc_cat[c];
        stats.total = rc;
        stats.r_prec_defined = retrieved_cat[c] > 0;
        stats.r_prec = retrieved_cat[c] > 0
                           ? static_cast<double>(rc_cat[c]) /
                                 static_cast<double>(retrieved_cat[c])
                           : 0.0;
        stats.r_rec = n_cat[c] > 0 ? static_cast<double>(rc_cat[c]) /
                                         static_cast<double>(n_cat[c])
                                   : 0.0;
        report.per_category[kAllCategories[c]] = stats;
    }
    return report;
}

} // namespace semspace
