#ifndef SEMSPACE_CORPUS_HPP
#define SEMSPACE_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semspace/tokenizer.hpp"
#include "semspace/vocabulary.hpp"

namespace semspace {

// A tokenized document mapped to vocabulary ids; unknown tokens dropped.
struct Document {
    std::uint32_t doc_id = 0;
    std::vector<TermId> token_ids;
};

// Streams tokenized documents from a UTF-8 plain-text source: a file with
// one document per line, or a directory of .txt files (one document per
// file, visited in sorted filename order). Re-readable; each for_each call
// restarts from the beginning.
class CorpusReader {
public:
    explicit CorpusReader(std::string path, TokenizerConfig config = {});

    // Calls fn once per document with the token list.
    void for_each(const std::function<void(const std::vector<std::string>&)>& fn) const;

    // Two-pass helpers (the reader can be traversed repeatedly).
    Vocabulary build_vocabulary(std::uint64_t min_count) const;
    std::vector<Document> load_documents(const Vocabulary& vocab) const;

    const std::string& path() const { return path_; }

private:
    std::string path_;
    TokenizerConfig config_;
    bool is_directory_ = false;
};

// Maps pre-tokenized docs to ids (unknown tokens dropped).
std::vector<Document> map_documents(const std::vector<std::vector<std::string>>& docs,
                                    const Vocabulary& vocab);

} // namespace semspace

#endif
