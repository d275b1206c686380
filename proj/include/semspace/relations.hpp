#ifndef SEMSPACE_RELATIONS_HPP
#define SEMSPACE_RELATIONS_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semspace {

// The SemEval-2010 Task 8 inventory: nine directed relations plus Other.
enum class RelationCategory {
    CauseEffect,
    ComponentWhole,
    ContentContainer,
    EntityDestination,
    EntityOrigin,
    MessageTopic,
    MemberCollection,
    InstrumentAgency,
    ProductProducer,
    Other,
};

inline constexpr std::size_t kNumCategories = 10;

inline constexpr std::array<RelationCategory, kNumCategories> kAllCategories = {
    RelationCategory::CauseEffect,      RelationCategory::ComponentWhole,
    RelationCategory::ContentContainer, RelationCategory::EntityDestination,
    RelationCategory::EntityOrigin,     RelationCategory::MessageTopic,
    RelationCategory::MemberCollection, RelationCategory::InstrumentAgency,
    RelationCategory::ProductProducer,  RelationCategory::Other,
};

// "Content-Container" (dataset surface form).
const char* category_label(RelationCategory c);
// "ContentContainer" (machine-readable reports).
const char* category_name(RelationCategory c);
// Case-insensitive, accepts both surface forms.
std::optional<RelationCategory> parse_category(std::string_view text);

enum class Direction { E1ToE2, E2ToE1, Undirected };

const char* direction_name(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

// One extracted relation: an ordered (head, tail) term pair with its
// category. Terms are tokenizer-normalized, nonempty and distinct.
struct RelationInstance {
    std::string head;
    std::string tail;
    RelationCategory category = RelationCategory::Other;
    Direction direction = Direction::Undirected;

    bool operator==(const RelationInstance&) const = default;
};

// SemEval-2010 Task 8 distribution format: a numbered line with the quoted
// sentence carrying <e1>..</e1> and <e2>..</e2> markers, then a relation
// line "Label(e1,e2)" / "Label(e2,e1)" / "Other", an optional "Comment:"
// line and a blank separator. The head is the label's first argument.
std::vector<RelationInstance> parse_semeval(std::istream& in);
std::vector<RelationInstance> parse_semeval(const std::string& path);

// Plain TSV carrier: "head<TAB>tail<TAB>category[<TAB>direction]" per line,
// missing direction meaning Undirected.
std::vector<RelationInstance> parse_tsv(std::istream& in);
std::vector<RelationInstance> parse_tsv(const std::string& path);

} // namespace semspace

#endif
