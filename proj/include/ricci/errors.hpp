#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Base of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input and usage errors. The CLI maps these to exit code 2.
struct InvalidGraph : Error { using Error::Error; };
struct UnsupportedParameter : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };
struct Unreachable : Error { using Error::Error; };
struct InvalidPairing : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct InvalidMatchingSize : Error { using Error::Error; };
struct IrregularGraph : Error { using Error::Error; };
struct UnsupportedGraph : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// A function received a map that is not 1-Lipschitz; carries one offending pair.
struct NotLipschitz : Error {
    NotLipschitz(const std::string& what, int u_, int v_) : Error(what), u(u_), v(v_) {}
    int u;
    int v;
};

// An internal certificate failed to close or two exact computations of the
// same quantity disagreed. Never caused by bad input; the CLI maps this to
// exit code 1.
struct MathInconsistency : Error { using Error::Error; };

} // namespace ricci
