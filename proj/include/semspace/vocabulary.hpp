#ifndef SEMSPACE_VOCABULARY_HPP
#define SEMSPACE_VOCABULARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semspace {

using TermId = std::uint32_t;

// Bidirectional token<->id map with corpus frequencies. Immutable after
// construction; safe to share across threads.
//
// build_vocabulary() assigns ids in descending frequency order, ties broken
// lexicographically, so id order (and the serialized form) is a pure
// function of the input corpus. Vocabularies reconstructed from token lists
// (pre-trained files) keep the file order and carry zero frequencies.
class Vocabulary {
public:
    Vocabulary() = default;

    // Tokens in final id order with their frequencies.
    Vocabulary(std::vector<std::string> tokens, std::vector<std::uint64_t> freq,
               std::uint64_t total_tokens);

    static Vocabulary from_tokens(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(TermId id) const { return tokens_[id]; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<TermId> id_of(std::string_view token) const;
    bool contains(std::string_view token) const { return id_of(token).has_value(); }
    std::uint64_t freq(TermId id) const { return freq_[id]; }
    std::uint64_t total_tokens() const { return total_tokens_; }

    bool operator==(const Vocabulary& other) const {
        return tokens_ == other.tokens_ && freq_ == other.freq_ &&
               total_tokens_ == other.total_tokens_;
    }

    // One "token<TAB>frequency" line per id, in id order.
    std::string serialize() const;
    void save(const std::string& path) const;
    static Vocabulary load(const std::string& path);

private:
    std::vector<std::string> tokens_;
    std::vector<std::uint64_t> freq_;
    std::unordered_map<std::string, TermId, std::hash<std::string>,
                       std::equal_to<>> id_of_;
    std::uint64_t total_tokens_ = 0;

    void rebuild_index();
};

// Retains tokens with corpus frequency >= min_count (min_count >= 1).
// Throws EmptyVocabulary if nothing survives.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::uint64_t min_count);

// Shared tail of vocabulary construction: threshold, order, index.
Vocabulary vocabulary_from_counts(
    std::unordered_map<std::string, std::uint64_t>&& counts,
    std::uint64_t total_tokens, std::uint64_t min_count);

} // namespace semspace

#endif
