#include "semspace/embedding_io.hpp"

#include <bit>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semspace/errors.hpp"

namespace semspace {

namespace {

void write_f32_le(std::ostream& out, float value) {
    const std::uint32_t bits = std::bit_cast<std::uint32_t>(value);
    const char bytes[4] = {
        static_cast<char>(bits & 0xFF),
        static_cast<char>((bits >> 8) & 0xFF),
        static_cast<char>((bits >> 16) & 0xFF),
        static_cast<char>((bits >> 24) & 0xFF),
    };
    out.write(bytes, 4);
}

float read_f32_le(const unsigned char* p) {
    const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                               (static_cast<std::uint32_t>(p[1]) << 8) |
                               (static_cast<std::uint32_t>(p[2]) << 16) |
                               (static_cast<std::uint32_t>(p[3]) << 24);
    return std::bit_cast<float>(bits);
}

// Parses "<vocab_size> <dim>" with no leading junk.
void parse_header(const std::string& line, std::uint64_t& n, std::uint64_t& dim) {
    std::uint64_t values[2];
    std::size_t pos = 0;
    for (int field = 0; field < 2; ++field) {
        if (field == 1) {
            if (pos >= line.size() || line[pos] != ' ') {
                throw MalformedHeader("embedding header: expected '<count> <dim>'");
            }
            ++pos;
        }
        if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos]))) {
            throw MalformedHeader("embedding header: expected '<count> <dim>'");
        }
        std::uint64_t v = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
            ++pos;
        }
        values[field] = v;
    }
    if (pos != line.size()) {
        throw MalformedHeader("embedding header: trailing bytes");
    }
    n = values[0];
    dim = values[1];
    if (dim < 1) throw MalformedHeader("embedding header: dim must be >= 1");
}

bool wanted(const TermFilter& filter, const std::string& token) {
    return !filter || filter->count(token) > 0;
}

struct LoadAccumulator {
    std::vector<std::string> tokens;
    std::vector<double> matrix;
    std::unordered_set<std::string> seen;
    std::size_t zero_dropped = 0;

    void add(std::string token, const std::vector<double>& row) {
        if (!seen.insert(token).second) {
            throw DuplicateToken("duplicate token in embedding file: " + token);
        }
        bool all_zero = true;
        for (double v : row) {
            if (v != 0.0) { all_zero = false; break; }
        }
        if (all_zero) {
            ++zero_dropped;
            return;
        }
        tokens.push_back(std::move(token));
        matrix.insert(matrix.end(), row.begin(), row.end());
    }

    EmbeddingSpace finish(std::size_t dim, const std::string& source) {
        if (zero_dropped > 0) {
            std::cerr << "warning: dropped " << zero_dropped
                      << " all-zero vector(s) while loading embeddings\n";
        }
        Provenance prov{ModelKind::Pretrained, "loaded=" + source};
        return EmbeddingSpace(Vocabulary::from_tokens(std::move(tokens)),
                              std::move(matrix), dim, std::move(prov));
    }
};

} // namespace

void write_binary(const EmbeddingSpace& space, std::ostream& out) {
    if (space.size() == 0) throw Error("write_binary: empty space");
    out << space.size() << ' ' << space.dim() << '\n';
    for (TermId id = 0; id < space.size(); ++id) {
        const std::string& token = space.vocab().token(id);
        out.write(token.data(), static_cast<std::streamsize>(token.size()));
        out.put(' ');
        for (double v : space.vector_of(id)) {
            write_f32_le(out, static_cast<float>(v));
        }
        out.put('\n');
    }
    if (!out) throw IoError("write_binary: stream failure");
}

void write_binary(const EmbeddingSpace& space, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_binary(space, out);
}

EmbeddingSpace read_binary(std::istream& in, const TermFilter& filter) {
    std::string header;
    if (!std::getline(in, header)) {
        throw MalformedHeader("embedding file: missing header line");
    }
    std::uint64_t declared = 0, dim64 = 0;
    parse_header(header, declared, dim64);
    const std::size_t dim = static_cast<std::size_t>(dim64);

    LoadAccumulator acc;
    std::vector<unsigned char> buf(dim * 4);
    std::vector<double> row(dim);
    std::string token;
    for (std::uint64_t entry = 0; entry < declared; ++entry) {
        token.clear();
        int c;
        while ((c = in.get()) != EOF && c != ' ') {
            token.push_back(static_cast<char>(c));
        }
        if (c == EOF) {
            throw TruncatedEntry("embedding entry " + std::to_string(entry + 1) +
                                 " of " + std::to_string(declared) +
                                 ": unexpected end of file");
        }
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(buf.size()));
        if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
            throw TruncatedEntry("embedding entry " + std::to_string(entry + 1) +
                                 " of " + std::to_string(declared) +
                                 ": unexpected end of file");
        }
        // Optional per-entry trailing newline.
        if (in.peek() == '\n') in.get();
        if (!wanted(filter, token)) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = static_cast<double>(read_f32_le(buf.data() + j * 4));
        }
        acc.add(token, row);
    }
    return acc.finish(dim, "binary");
}

EmbeddingSpace read_binary(const std::string& path, const TermFilter& filter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    EmbeddingSpace space = read_binary(in, filter);
    return space;
}

void write_text(const EmbeddingSpace& space, std::ostream& out) {
    if (space.size() == 0) throw Error("write_text: empty space");
    out << space.size() << ' ' << space.dim() << '\n';
    char num[64];
    for (TermId id = 0; id < space.size(); ++id) {
        out << space.vocab().token(id);
        for (double v : space.vector_of(id)) {
            std::snprintf(num, sizeof(num), "%.9g", v);
            out.put(' ');
            out << num;
        }
        out.put('\n');
    }
    if (!out) throw IoError("write_text: stream failure");
}

void write_text(const EmbeddingSpace& space, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_text(space, out);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

bool is_uint(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

EmbeddingSpace read_text(std::istream& in, const TermFilter& filter) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    LoadAccumulator acc;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> fields = split_ws(line);
        if (fields.empty()) continue;
        if (first_content_line) {
            first_content_line = false;
            // Optional "<count> <dim>" header.
            if (fields.size() == 2 && is_uint(fields[0]) && is_uint(fields[1])) {
                dim = static_cast<std::size_t>(std::stoull(fields[1]));
                if (dim < 1) throw MalformedHeader("text embedding header: dim must be >= 1");
                continue;
            }
        }
        if (dim == 0) {
            if (fields.size() < 2) {
                throw DimensionMismatch("line " + std::to_string(line_no) +
                                        ": expected a token and vector values");
            }
            dim = fields.size() - 1;
        }
        if (fields.size() != dim + 1) {
            throw DimensionMismatch("line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(dim) + " values, found " +
                                    std::to_string(fields.size() - 1));
        }
        std::vector<double> row(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            char* end = nullptr;
            row[j] = std::strtod(fields[j + 1].c_str(), &end);
            if (end == fields[j + 1].c_str() || *end != '\0') {
                throw DimensionMismatch("line " + std::to_string(line_no) +
                                        ": bad value '" + fields[j + 1] + "'");
            }
        }
        if (!wanted(filter, fields[0])) continue;
        acc.add(fields[0], row);
    }
    if (dim == 0) throw MalformedHeader("text embedding file: no content");
    return acc.finish(dim, "text");
}

EmbeddingSpace read_text(const std::string& path, const TermFilter& filter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    EmbeddingSpace space = read_text(in, filter);
    return space;
}

} // namespace semspace
