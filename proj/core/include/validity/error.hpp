#ifndef VALIDITY_ERROR_HPP
#define VALIDITY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace validity {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
    structural,          ///< shape or dimension mismatch
    degenerate_input,    ///< e.g. a zero-sum membership column
    invalid_request,     ///< bad parameter, unknown dataset name, c > n
    degenerate_cluster,  ///< a cluster lost all of its membership mass
    separation_zero,     ///< two centroids coincide; distance-ratio indexes are undefined
    solver_failure,      ///< every FCM restart degenerated
    too_small,           ///< fewer than two points
    format,              ///< malformed CSV input
    io,                  ///< file could not be read or written
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace validity

#endif
