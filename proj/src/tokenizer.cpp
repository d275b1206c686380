#include "semspace/tokenizer.hpp"

#include <array>
#include <algorithm>
#include <cstdint>

namespace semspace {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 codepoint starting at text[pos]; advances pos.
// Malformed sequences yield U+FFFD and advance one byte.
char32_t next_codepoint(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) {
        return static_cast<std::uint8_t>(text[i]);
    };
    const std::uint8_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++pos;
        return kReplacement;
    }
    if (pos + len > text.size()) {
        ++pos;
        return kReplacement;
    }
    for (int i = 1; i < len; ++i) {
        const std::uint8_t b = byte(pos + i);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF) {
        ++pos;
        return kReplacement;
    }
    pos += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

struct Range {
    char32_t lo, hi;
};

// Letter ranges for the common scripts; coarse but monotone by lo.
constexpr std::array<Range, 28> kLetterRanges = {{
    {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02FF},
    {0x0370, 0x0374}, {0x0376, 0x0377}, {0x037A, 0x037D},
    {0x037F, 0x037F}, {0x0386, 0x0386}, {0x0388, 0x03FF},
    {0x0400, 0x0481}, {0x048A, 0x052F}, {0x0531, 0x0556},
    {0x0561, 0x0587}, {0x05D0, 0x05EA}, {0x0620, 0x064A},
    {0x0671, 0x06D3}, {0x0900, 0x097F}, {0x0E01, 0x0E3A},
    {0x10A0, 0x10FF}, {0x1E00, 0x1FFF}, {0x3040, 0x30FF},
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3},
    {0xF900, 0xFB06},
}};

bool is_nonascii_letter(char32_t cp) {
    auto it = std::upper_bound(
        kLetterRanges.begin(), kLetterRanges.end(), cp,
        [](char32_t c, const Range& r) { return c < r.lo; });
    if (it == kLetterRanges.begin()) return false;
    --it;
    return cp <= it->hi;
}

bool is_word_codepoint(char32_t cp) {
    if (cp < 0x80) {
        return cp == '_' || (cp >= '0' && cp <= '9') ||
               (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    }
    return is_nonascii_letter(cp);
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    return cp;
}

} // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t current_len = 0; // codepoints
    const auto flush = [&] {
        if (current_len >= config.min_token_len && !current.empty()) {
            tokens.push_back(current);
        }
        current.clear();
        current_len = 0;
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp = next_codepoint(text, pos);
        if (is_word_codepoint(cp)) {
            if (config.lowercase) cp = to_lower(cp);
            append_utf8(current, cp);
            ++current_len;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::string normalize_term(std::string_view text,
                           const TokenizerConfig& config) {
    const std::vector<std::string> parts = tokenize(text, config);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out.push_back('_');
        out += parts[i];
    }
    return out;
}

} // namespace semspace
