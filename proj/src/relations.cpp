#include "semspace/relations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semspace/errors.hpp"
#include "semspace/tokenizer.hpp"

namespace semspace {

namespace {

constexpr std::array<const char*, kNumCategories> kLabels = {
    "Cause-Effect",   "Component-Whole",    "Content-Container",
    "Entity-Destination", "Entity-Origin",  "Message-Topic",
    "Member-Collection",  "Instrument-Agency", "Product-Producer",
    "Other",
};

constexpr std::array<const char*, kNumCategories> kNames = {
    "CauseEffect",   "ComponentWhole",    "ContentContainer",
    "EntityDestination", "EntityOrigin",  "MessageTopic",
    "MemberCollection",  "InstrumentAgency", "ProductProducer",
    "Other",
};

std::string fold(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '-' || ch == '_') continue;
        out.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

} // namespace

const char* category_label(RelationCategory c) {
    return kLabels[static_cast<std::size_t>(c)];
}

const char* category_name(RelationCategory c) {
    return kNames[static_cast<std::size_t>(c)];
}

std::optional<RelationCategory> parse_category(std::string_view text) {
    const std::string folded = fold(text);
    for (std::size_t i = 0; i < kNumCategories; ++i) {
        if (folded == fold(kLabels[i])) return kAllCategories[i];
    }
    return std::nullopt;
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::E1ToE2: return "E1ToE2";
        case Direction::E2ToE1: return "E2ToE1";
        case Direction::Undirected: return "Undirected";
    }
    return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
    const std::string folded = fold(text);
    if (folded == "e1toe2") return Direction::E1ToE2;
    if (folded == "e2toe1") return Direction::E2ToE1;
    if (folded == "undirected") return Direction::Undirected;
    return std::nullopt;
}

namespace {

// Extracts the text between <tag> and </tag>; nullopt when absent.
std::optional<std::string> marked_span(const std::string& sentence,
                                       const std::string& tag) {
    const std::string open = "<" + tag + ">";
    const std::string close = "</" + tag + ">";
    const std::size_t a = sentence.find(open);
    if (a == std::string::npos) return std::nullopt;
    const std::size_t b = sentence.find(close, a + open.size());
    if (b == std::string::npos) return std::nullopt;
    return sentence.substr(a + open.size(), b - a - open.size());
}

RelationInstance make_instance(const std::string& e1, const std::string& e2,
                               RelationCategory category, Direction direction,
                               const std::string& where) {
    RelationInstance inst;
    inst.head = normalize_term(direction == Direction::E2ToE1 ? e2 : e1);
    inst.tail = normalize_term(direction == Direction::E2ToE1 ? e1 : e2);
    inst.category = category;
    inst.direction = direction;
    if (inst.head.empty() || inst.tail.empty()) {
        throw MalformedRecord(where + ": empty entity after normalization");
    }
    if (inst.head == inst.tail) {
        throw MalformedRecord(where + ": head and tail normalize to the same term '" +
                              inst.head + "'");
    }
    return inst;
}

} // namespace

std::vector<RelationInstance> parse_semeval(std::istream& in) {
    std::vector<RelationInstance> instances;
    std::string line;
    std::size_t record = 0;
    while (true) {
        // Skip blank separators between records.
        bool have_line = false;
        while (std::getline(in, line)) {
            if (!trim(line).empty()) {
                have_line = true;
                break;
            }
        }
        if (!have_line) break;
        ++record;
        const std::string where = "record " + std::to_string(record);

        // "<index><TAB>"<sentence>""
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 ||
            line.find_first_not_of("0123456789", 0) < tab) {
            throw MalformedRecord(where + ": expected '<index>\\t\"<sentence>\"'");
        }
        std::string sentence = trim(line.substr(tab + 1));
        if (sentence.size() >= 2 && sentence.front() == '"' && sentence.back() == '"') {
            sentence = sentence.substr(1, sentence.size() - 2);
        }
        const auto e1 = marked_span(sentence, "e1");
        const auto e2 = marked_span(sentence, "e2");
        if (!e1 || !e2) {
            throw MalformedRecord(where + ": sentence lacks <e1>/<e2> markers");
        }

        std::string label_line;
        if (!std::getline(in, label_line)) {
            throw MalformedRecord(where + ": missing relation line");
        }
        const std::string label = trim(label_line);
        RelationCategory category;
        Direction direction;
        const std::size_t paren = label.find('(');
        if (paren == std::string::npos) {
            const auto cat = parse_category(label);
            if (!cat) throw UnknownLabel(where + ": unknown relation label '" + label + "'");
            // Only Other may appear without arguments.
            if (*cat != RelationCategory::Other) {
                throw UnknownLabel(where + ": label '" + label + "' lacks (e1,e2) arguments");
            }
            category = RelationCategory::Other;
            direction = Direction::Undirected;
        } else {
            if (label.back() != ')') {
                throw UnknownLabel(where + ": unknown relation label '" + label + "'");
            }
            const auto cat = parse_category(label.substr(0, paren));
            const std::string args = label.substr(paren + 1, label.size() - paren - 2);
            if (!cat) {
                throw UnknownLabel(where + ": unknown relation label '" + label + "'");
            }
            if (args == "e1,e2") {
                direction = Direction::E1ToE2;
            } else if (args == "e2,e1") {
                direction = Direction::E2ToE1;
            } else {
                throw UnknownLabel(where + ": unknown argument order '" + args + "'");
            }
            category = *cat;
        }

        instances.push_back(make_instance(*e1, *e2, category, direction, where));

        // Optional comment line, then a blank separator (or EOF).
        std::streampos before = in.tellg();
        if (std::getline(in, line)) {
            const std::string trimmed = trim(line);
            if (trimmed.rfind("Comment", 0) == 0) {
                // consumed
            } else if (trimmed.empty()) {
                // record separator
            } else {
                in.seekg(before); // start of the next record
            }
        }
    }
    return instances;
}

std::vector<RelationInstance> parse_semeval(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    return parse_semeval(in);
}

std::vector<RelationInstance> parse_tsv(std::istream& in) {
    std::vector<RelationInstance> instances;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::string where = "line " + std::to_string(line_no);

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() < 3 || fields.size() > 4) {
            throw MalformedRecord(where + ": expected 3 or 4 tab-separated fields, found " +
                                  std::to_string(fields.size()));
        }
        const auto category = parse_category(fields[2]);
        if (!category) {
            throw UnknownLabel(where + ": unknown relation label '" + fields[2] + "'");
        }
        Direction direction = Direction::Undirected;
        if (fields.size() == 4) {
            const auto parsed = parse_direction(fields[3]);
            if (!parsed) {
                throw MalformedRecord(where + ": unknown direction '" + fields[3] + "'");
            }
            direction = *parsed;
        }
        RelationInstance inst;
        inst.head = normalize_term(fields[0]);
        inst.tail = normalize_term(fields[1]);
        inst.category = *category;
        inst.direction = direction;
        if (inst.head.empty() || inst.tail.empty()) {
            throw MalformedRecord(where + ": empty entity after normalization");
        }
        if (inst.head == inst.tail) {
            throw MalformedRecord(where + ": head and tail normalize to the same term '" +
                                  inst.head + "'");
        }
        instances.push_back(std::move(inst));
    }
    return instances;
}

std::vector<RelationInstance> parse_tsv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    return parse_tsv(in);
}

} // namespace semspace
