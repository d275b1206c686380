#ifndef SEMSPACE_ERRORS_HPP
#define SEMSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semspace {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyVocabulary : Error { using Error::Error; };
struct EmptyCorpus : Error { using Error::Error; };
struct AlreadyWeighted : Error { using Error::Error; };
struct RankTooLarge : Error { using Error::Error; };
struct UnknownTerm : Error { using Error::Error; };
struct MalformedHeader : Error { using Error::Error; };
struct TruncatedEntry : Error { using Error::Error; };
struct DuplicateToken : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct MalformedRecord : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct KExceedsVocabulary : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace semspace

#endif
