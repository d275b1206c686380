#include "semspace/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semspace/errors.hpp"

namespace fs = std::filesystem;

namespace semspace {

CorpusReader::CorpusReader(std::string path, TokenizerConfig config)
    : path_(std::move(path)), config_(config) {
    std::error_code ec;
    if (!fs::exists(path_, ec)) {
        throw IoError("corpus path does not exist: " + path_);
    }
    is_directory_ = fs::is_directory(path_, ec);
}

void CorpusReader::for_each(
    const std::function<void(const std::vector<std::string>&)>& fn) const {
    if (is_directory_) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(path_)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                files.push_back(entry.path().string());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::ifstream in(file, std::ios::binary);
            if (!in) throw IoError("cannot open: " + file);
            std::ostringstream text;
            text << in.rdbuf();
            fn(tokenize(text.str(), config_));
        }
    } else {
        std::ifstream in(path_, std::ios::binary);
        if (!in) throw IoError("cannot open: " + path_);
        std::string line;
        while (std::getline(in, line)) {
            fn(tokenize(line, config_));
        }
    }
}

Vocabulary CorpusReader::build_vocabulary(std::uint64_t min_count) const {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
    for_each([&](const std::vector<std::string>& doc) {
        for (const auto& token : doc) {
            ++counts[token];
            ++total;
        }
    });
    return vocabulary_from_counts(std::move(counts), total, min_count);
}

std::vector<Document> CorpusReader::load_documents(const Vocabulary& vocab) const {
    std::vector<Document> docs;
    for_each([&](const std::vector<std::string>& tokens) {
        Document doc;
        doc.doc_id = static_cast<std::uint32_t>(docs.size());
        for (const auto& token : tokens) {
            if (auto id = vocab.id_of(token)) doc.token_ids.push_back(*id);
        }
        docs.push_back(std::move(doc));
    });
    return docs;
}

std::vector<Document> map_documents(
    const std::vector<std::vector<std::string>>& raw_docs,
    const Vocabulary& vocab) {
    std::vector<Document> docs;
    docs.reserve(raw_docs.size());
    for (const auto& tokens : raw_docs) {
        Document doc;
        doc.doc_id = static_cast<std::uint32_t>(docs.size());
        for (const auto& token : tokens) {
            if (auto id = vocab.id_of(token)) doc.token_ids.push_back(*id);
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

} // namespace semspace
