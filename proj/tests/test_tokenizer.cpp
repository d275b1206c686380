#include <doctest.h>

#include "semspace/tokenizer.hpp"

using namespace semspace;

TEST_CASE("tokenize splits on punctuation and lowercases") {
    const auto tokens =
        tokenize("There were apples, pears and oranges in the bowl.");
    const std::vector<std::string> expected = {
        "there", "were", "apples", "pears", "and", "oranges", "in", "the", "bowl"};
    CHECK(tokens == expected);
}

TEST_CASE("tokenize of empty input is empty") {
    CHECK(tokenize("").empty());
}

TEST_CASE("underscore phrases survive as single tokens") {
    const auto tokens = tokenize("New_York is big");
    const std::vector<std::string> expected = {"new_york", "is", "big"};
    CHECK(tokens == expected);
}

TEST_CASE("digits are token characters") {
    const auto tokens = tokenize("word2vec beats tf-idf v2.0");
    const std::vector<std::string> expected = {"word2vec", "beats", "tf",
                                               "idf", "v2", "0"};
    CHECK(tokens == expected);
}

TEST_CASE("lowercase can be disabled") {
    TokenizerConfig config;
    config.lowercase = false;
    const auto tokens = tokenize("New_York Is Big", config);
    const std::vector<std::string> expected = {"New_York", "Is", "Big"};
    CHECK(tokens == expected);
}

TEST_CASE("min_token_len drops short tokens") {
    TokenizerConfig config;
    config.min_token_len = 2;
    const auto tokens = tokenize("a bc d efg", config);
    const std::vector<std::string> expected = {"bc", "efg"};
    CHECK(tokens == expected);
}

TEST_CASE("invalid utf-8 bytes separate tokens") {
    std::string text = "abc";
    text.push_back(static_cast<char>(0xFF));
    text += "def";
    const auto tokens = tokenize(text);
    const std::vector<std::string> expected = {"abc", "def"};
    CHECK(tokens == expected);
}

TEST_CASE("accented letters stay inside tokens and fold case") {
    const auto tokens = tokenize("Élève café");
    const std::vector<std::string> expected = {"élève", "café"};
    CHECK(tokens == expected);
}

TEST_CASE("unicode punctuation separates tokens") {
    // em dash and curly quotes
    const auto tokens = tokenize("alpha—beta ‘gamma’");
    const std::vector<std::string> expected = {"alpha", "beta", "gamma"};
    CHECK(tokens == expected);
}

TEST_CASE("normalize_term joins multi-token spans with underscores") {
    CHECK(normalize_term("Orange Juice") == "orange_juice");
    CHECK(normalize_term("bowl") == "bowl");
    CHECK(normalize_term("  ") == "");
}
