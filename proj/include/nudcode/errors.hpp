#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nudcode {

// Broad classes used by the CLI to pick an exit code.
enum class ErrorClass { input_data, usage, unknown, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

#define NUDCODE_DEFINE_ERROR(Name, Class)                                          \
    class Name : public Error {                                                    \
    public:                                                                        \
        explicit Name(const std::string& what) : Error(ErrorClass::Class, what) {} \
    };

// Malformed or inconsistent input data.
NUDCODE_DEFINE_ERROR(ValidationError, input_data)
NUDCODE_DEFINE_ERROR(CycleError, input_data)
NUDCODE_DEFINE_ERROR(UnreachableSinkError, input_data)
NUDCODE_DEFINE_ERROR(DuplicateSourceError, input_data)
NUDCODE_DEFINE_ERROR(ShapeError, input_data)

// Caller asked for something out of range.
NUDCODE_DEFINE_ERROR(IndexError, usage)
NUDCODE_DEFINE_ERROR(BudgetError, usage)
NUDCODE_DEFINE_ERROR(CapError, usage)
NUDCODE_DEFINE_ERROR(ZeroInverseError, usage)

// Search gave up before reaching a verdict.
NUDCODE_DEFINE_ERROR(TimeoutError, unknown)
NUDCODE_DEFINE_ERROR(SynthesisError, unknown)

// Broken internal invariants. These are bugs.
NUDCODE_DEFINE_ERROR(StructureError, internal)
NUDCODE_DEFINE_ERROR(SupportError, internal)

#undef NUDCODE_DEFINE_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& reason)
        : Error(ErrorClass::input_data, "line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace nudcode
