#ifndef LINCO_ERRORS_HPP
#define LINCO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linco {

// Base for all library errors. `code()` is a stable machine-readable tag
// that the CLI emits in its error records.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class MalformedRecord : public Error {
public:
    explicit MalformedRecord(const std::string& msg) : Error("MalformedRecord", msg) {}
};

class GroupOutOfRange : public Error {
public:
    explicit GroupOutOfRange(const std::string& msg) : Error("GroupOutOfRange", msg) {}
};

class EmptyGroup : public Error {
public:
    explicit EmptyGroup(const std::string& msg) : Error("EmptyGroup", msg) {}
};

class GroupTooSmall : public Error {
public:
    explicit GroupTooSmall(const std::string& msg) : Error("GroupTooSmall", msg) {}
};

class InvalidGroupCount : public Error {
public:
    explicit InvalidGroupCount(const std::string& msg) : Error("InvalidGroupCount", msg) {}
};

class UnknownCase : public Error {
public:
    explicit UnknownCase(const std::string& msg) : Error("UnknownCase", msg) {}
};

class EmptyFact : public Error {
public:
    explicit EmptyFact(const std::string& msg) : Error("EmptyFact", msg) {}
};

class DivergedTraining : public Error {
public:
    explicit DivergedTraining(const std::string& msg) : Error("DivergedTraining", msg) {}
};

class DegenerateGroup : public Error {
public:
    explicit DegenerateGroup(const std::string& msg) : Error("DegenerateGroup", msg) {}
};

class DegenerateSeries : public Error {
public:
    explicit DegenerateSeries(const std::string& msg) : Error("DegenerateSeries", msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

} // namespace linco

#endif
