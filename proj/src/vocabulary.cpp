#include "semspace/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semspace/errors.hpp"

namespace semspace {

Vocabulary::Vocabulary(std::vector<std::string> tokens,
                       std::vector<std::uint64_t> freq,
                       std::uint64_t total_tokens)
    : tokens_(std::move(tokens)), freq_(std::move(freq)),
      total_tokens_(total_tokens) {
    if (tokens_.size() != freq_.size()) {
        throw Error("vocabulary: token/frequency size mismatch");
    }
    rebuild_index();
}

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens) {
    std::vector<std::uint64_t> freq(tokens.size(), 0);
    return Vocabulary(std::move(tokens), std::move(freq), 0);
}

void Vocabulary::rebuild_index() {
    id_of_.clear();
    id_of_.reserve(tokens_.size());
    for (TermId id = 0; id < tokens_.size(); ++id) {
        auto [it, inserted] = id_of_.emplace(tokens_[id], id);
        if (!inserted) {
            throw DuplicateToken("vocabulary: duplicate token '" + tokens_[id] + "'");
        }
    }
}

std::optional<TermId> Vocabulary::id_of(std::string_view token) const {
    auto it = id_of_.find(std::string(token));
    if (it == id_of_.end()) return std::nullopt;
    return it->second;
}

std::string Vocabulary::serialize() const {
    std::string out;
    for (TermId id = 0; id < tokens_.size(); ++id) {
        out += tokens_[id];
        out.push_back('\t');
        out += std::to_string(freq_[id]);
        out.push_back('\n');
    }
    return out;
}

void Vocabulary::save(const std::string& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path);
    const std::string bytes = serialize();
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("write failed: " + path);
}

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open: " + path);
    std::vector<std::string> tokens;
    std::vector<std::uint64_t> freq;
    std::uint64_t total = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedRecord("vocabulary line " + std::to_string(line_no) +
                                  ": missing tab separator");
        }
        tokens.push_back(line.substr(0, tab));
        try {
            freq.push_back(std::stoull(line.substr(tab + 1)));
        } catch (const std::exception&) {
            throw MalformedRecord("vocabulary line " + std::to_string(line_no) +
                                  ": bad frequency");
        }
        total += freq.back();
    }
    return Vocabulary(std::move(tokens), std::move(freq), total);
}

Vocabulary vocabulary_from_counts(
    std::unordered_map<std::string, std::uint64_t>&& counts,
    std::uint64_t total_tokens, std::uint64_t min_count) {
    if (min_count < 1) throw Error("build_vocabulary: min_count must be >= 1");
    std::vector<std::pair<std::string, std::uint64_t>> retained;
    retained.reserve(counts.size());
    for (auto& [token, count] : counts) {
        if (count >= min_count) retained.emplace_back(token, count);
    }
    counts.clear();
    if (retained.empty()) {
        throw EmptyVocabulary("no token reaches min_count=" +
                              std::to_string(min_count));
    }
    std::sort(retained.begin(), retained.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    std::vector<std::string> tokens;
    std::vector<std::uint64_t> freq;
    tokens.reserve(retained.size());
    freq.reserve(retained.size());
    for (auto& [token, count] : retained) {
        tokens.push_back(std::move(token));
        freq.push_back(count);
    }
    return Vocabulary(std::move(tokens), std::move(freq), total_tokens);
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::uint64_t min_count) {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
    for (const auto& doc : docs) {
        for (const auto& token : doc) {
            ++counts[token];
            ++total;
        }
    }
    return vocabulary_from_counts(std::move(counts), total, min_count);
}

} // namespace semspace
