#pragma once

#include <stdexcept>
#include <string>

namespace stringy {

// Domain errors map to CLI exit code 1, parse/input errors to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define STRINGY_DOMAIN_ERROR(Name)                                  \
    class Name : public DomainError {                               \
    public:                                                         \
        explicit Name(const std::string& what = "")                 \
            : DomainError(#Name, what) {}                           \
    };

STRINGY_DOMAIN_ERROR(NotFullDimensional)
STRINGY_DOMAIN_ERROR(NonLatticeVertices)
STRINGY_DOMAIN_ERROR(OriginNotInterior)
STRINGY_DOMAIN_ERROR(EmptyFineInterior)
STRINGY_DOMAIN_ERROR(NotNormalized)
STRINGY_DOMAIN_ERROR(NotAlmostPseudoreflexive)
STRINGY_DOMAIN_ERROR(NotPseudoreflexive)
STRINGY_DOMAIN_ERROR(NotReflexive)
STRINGY_DOMAIN_ERROR(SingularFace)
STRINGY_DOMAIN_ERROR(ZeroDimensionalFace)
STRINGY_DOMAIN_ERROR(NonPositiveGrading)
STRINGY_DOMAIN_ERROR(DimensionGuard)
STRINGY_DOMAIN_ERROR(InvalidParams)
STRINGY_DOMAIN_ERROR(UnboundedRegion)
STRINGY_DOMAIN_ERROR(EmptyRegion)
STRINGY_DOMAIN_ERROR(PoleEvaluation)
STRINGY_DOMAIN_ERROR(InternalCheck)

#undef STRINGY_DOMAIN_ERROR

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        std::string s = "ParseError: " + what;
        if (line > 0) {
            s += " (line " + std::to_string(line);
            if (column > 0) s += ", column " + std::to_string(column);
            s += ")";
        }
        return s;
    }
    int line_;
    int column_;
};

class AmbiguousOrientation : public ParseError {
public:
    explicit AmbiguousOrientation(const std::string& what)
        : ParseError("AmbiguousOrientation: " + what) {}
};

} // namespace stringy
