#ifndef SKINCLS_CORE_ERROR_HPP
#define SKINCLS_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace skincls {

// Error taxonomy shared by the dataset, evaluation and CLI layers.
// Each class maps to one C-API status code.

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mask pixel outside the [255 255 255] / [0 0 0] convention in strict mode.
struct AnnotationError : std::runtime_error {
    explicit AnnotationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset root missing images/ or masks/.
struct LayoutError : std::runtime_error {
    explicit LayoutError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyDatasetError : std::runtime_error {
    explicit EmptyDatasetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A record set with no skin (or no non-skin) rows; the affected rate is undefined.
struct DegenerateClassError : std::runtime_error {
    explicit DegenerateClassError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skincls

#endif
