#pragma once

#include <stdexcept>
#include <string>

namespace hypersync {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// hypergraph validation
struct EmptyEdge : Error { using Error::Error; };
struct DuplicateVertexInEdge : Error { using Error::Error; };
struct UnknownVertexLabel : Error { using Error::Error; };
struct DuplicateLabel : Error { using Error::Error; };
struct NonpositiveWeight : Error { using Error::Error; };
struct DisconnectedHypergraph : Error { using Error::Error; };
struct NotUniform : Error { using Error::Error; };

// linear algebra
struct DimensionMismatch : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };
struct ANotPositiveDefinite : Error { using Error::Error; };
struct PNotPositiveDefinite : Error { using Error::Error; };

// dynamics
struct NonFinite : Error { using Error::Error; };
struct ZeroDerivative : Error { using Error::Error; };

// io
struct EmptyFile : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace hypersync
