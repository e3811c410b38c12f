#ifndef QSP_ERRORS_HPP
#define QSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsp {

// Thrown when an iterated limit p->0, q->0 does not exist.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an enumeration would exceed a configured guard.
struct SizeLimit : std::runtime_error {
    explicit SizeLimit(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a coset representative is not of minimal length.
struct NotMinimalCoset : std::invalid_argument {
    explicit NotMinimalCoset(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an operator is requested for a rank that does not admit it.
struct RankError : std::invalid_argument {
    explicit RankError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown on malformed shapes (invalid partitions, size mismatches).
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a structural guarantee fails; always indicates a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qsp

#endif
