#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttk {

enum class ErrorClass {
    TypeMismatch,
    IllFormedEntry,
    ProjectionOfEmpty,
    VarInEmptyContext,
    InternalStuck,
    ParseError,
};

std::string_view error_class_name(ErrorClass c);

/// Raised by the kernel. `path` lists the constructors from the checked root
/// down to the offending sub-tree, separated by '/'.
class KernelError : public std::runtime_error {
public:
    KernelError(ErrorClass cls, std::string message, std::string path = {})
        : std::runtime_error(format(cls, message, path)),
          cls_(cls),
          message_(std::move(message)),
          path_(std::move(path)) {}

    ErrorClass error_class() const { return cls_; }
    const std::string& message() const { return message_; }
    const std::string& path() const { return path_; }

private:
    static std::string format(ErrorClass cls, const std::string& message, const std::string& path) {
        std::string out(error_class_name(cls));
        out += ": ";
        out += message;
        if (!path.empty()) out += " (at " + path + ")";
        return out;
    }

    ErrorClass cls_;
    std::string message_;
    std::string path_;
};

inline std::string_view error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::TypeMismatch: return "TypeError";
        case ErrorClass::IllFormedEntry: return "IllFormedEntry";
        case ErrorClass::ProjectionOfEmpty: return "ProjectionOfEmpty";
        case ErrorClass::VarInEmptyContext: return "VarInEmptyContext";
        case ErrorClass::InternalStuck: return "InternalStuck";
        case ErrorClass::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace ttk
