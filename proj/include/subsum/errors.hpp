#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace subsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGroupError : Error { using Error::Error; };
struct InvalidElementError : Error { using Error::Error; };
struct InvalidParameterError : Error { using Error::Error; };
struct InvalidSubgroupError : Error { using Error::Error; };
struct ResourceLimitError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };

// Parse failures carry the offset of the offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// The input graph cannot be read as a subgroup/extended sum graph.
struct ReconstructError : Error { using Error::Error; };

// Several parameter sets explain the same graph equally well.
struct AmbiguityError : ReconstructError {
    std::vector<long long> candidates;  // candidate values of k
    AmbiguityError(const std::string& what, std::vector<long long> cand)
        : ReconstructError(what), candidates(std::move(cand)) {}
};

// Vertex cap for explicit enumeration. SUBSUM_MAX_N overrides the default 512.
long long max_vertices();

}  // namespace subsum
