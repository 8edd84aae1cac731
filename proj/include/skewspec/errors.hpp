#pragma once

#include <stdexcept>
#include <string>

namespace skewspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct NotSkewSymmetric : Error { using Error::Error; };
struct InvalidSpectrum : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct WrongCompleteOrder : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct CertificateFailed : Error { using Error::Error; };

struct NotBipartite : Error {
    int u = -1, v = -1;
    NotBipartite(int u_, int v_)
        : Error("graph is not bipartite: edge {" + std::to_string(u_) + ", " +
                std::to_string(v_) + "} joins two vertices on the same side"),
          u(u_), v(v_) {}
};

struct NonConvergence : Error {
    double residual = 0.0;
    explicit NonConvergence(double r)
        : Error("eigensolver sweep limit reached, off-diagonal residual " + std::to_string(r)),
          residual(r) {}
};

struct ParseError : Error {
    int line = 0;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

} // namespace skewspec
