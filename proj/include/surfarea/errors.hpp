#pragma once

#include <stdexcept>
#include <string>

namespace surfarea {

struct DegenerateTriangle : std::runtime_error {
    explicit DegenerateTriangle(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownField : std::invalid_argument {
    explicit UnknownField(const std::string& what) : std::invalid_argument(what) {}
};

struct MeshMismatch : std::runtime_error {
    explicit MeshMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveError : std::runtime_error {
    explicit NonpositiveError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surfarea
