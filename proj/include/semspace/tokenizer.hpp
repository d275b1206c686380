#ifndef SEMSPACE_TOKENIZER_HPP
#define SEMSPACE_TOKENIZER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace semspace {

struct TokenizerConfig {
    bool lowercase = true;
    std::size_t min_token_len = 1; // in codepoints
};

// Splits UTF-8 text into maximal runs of letters/digits/underscore.
// Punctuation and whitespace separate tokens; underscore is a token
// character so pre-joined phrases ("new_york") survive as one token.
// Invalid byte sequences decode to U+FFFD, which acts as a separator.
// Case folding covers ASCII, Latin-1, Greek and Cyrillic; other scripts
// pass through unchanged.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

// Normalizes a term the same way tokenize() would, joining multi-token
// spans with underscores ("orange juice" -> "orange_juice").
std::string normalize_term(std::string_view text,
                           const TokenizerConfig& config = {});

} // namespace semspace

#endif
