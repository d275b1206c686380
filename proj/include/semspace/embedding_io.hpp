#ifndef SEMSPACE_EMBEDDING_IO_HPP
#define SEMSPACE_EMBEDDING_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>

#include "semspace/embedding_space.hpp"

namespace semspace {

using TermFilter = std::optional<std::unordered_set<std::string>>;

// Binary format (the one published pre-trained archives use):
//   ASCII header "<vocab_size> <dim>\n", then per entry: token bytes, one
//   0x20 byte, dim little-endian IEEE-754 float32 values, one trailing
//   0x0A. Tokens may contain any bytes except 0x20 and 0x0A; a trailing
//   0x0A per entry is optional on read.
//
// read_binary streams the file in one pass; with a filter only matching
// tokens are kept, so memory is O(|filter| * dim) regardless of file size.
// All-zero rows are dropped with a warning on stderr. Duplicate detection
// covers retained tokens.
void write_binary(const EmbeddingSpace& space, std::ostream& out);
void write_binary(const EmbeddingSpace& space, const std::string& path);
EmbeddingSpace read_binary(std::istream& in, const TermFilter& filter = std::nullopt);
EmbeddingSpace read_binary(const std::string& path, const TermFilter& filter = std::nullopt);

// Text format: header "<vocab_size> <dim>", then one
// "token v1 v2 ... vdim" line per term, values with 9 significant digits.
// A header line is auto-detected on read and optional.
void write_text(const EmbeddingSpace& space, std::ostream& out);
void write_text(const EmbeddingSpace& space, const std::string& path);
EmbeddingSpace read_text(std::istream& in, const TermFilter& filter = std::nullopt);
EmbeddingSpace read_text(const std::string& path, const TermFilter& filter = std::nullopt);

} // namespace semspace

#endif
