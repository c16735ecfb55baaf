#pragma once

#include <stdexcept>
#include <string>

namespace col {

// Error classes map onto CLI exit codes: input -> 2, guard -> 3, everything else -> 1.
enum class ErrorKind { Input, Guard, Verify, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, std::string cls, const std::string& msg)
        : std::runtime_error(msg), kind_(k), cls_(std::move(cls)) {}
    ErrorKind kind() const { return kind_; }
    const std::string& cls() const { return cls_; }

private:
    ErrorKind kind_;
    std::string cls_;
};

inline Error input_error(const std::string& cls, const std::string& msg) {
    return Error(ErrorKind::Input, cls, msg);
}
inline Error guard_error(const std::string& cls, const std::string& msg) {
    return Error(ErrorKind::Guard, cls, msg);
}
inline Error verify_error(const std::string& cls, const std::string& msg) {
    return Error(ErrorKind::Verify, cls, msg);
}
inline Error internal_error(const std::string& msg) {
    return Error(ErrorKind::Internal, "internal", msg);
}

}  // namespace col
