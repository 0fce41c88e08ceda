#include "weiljets/rational.hpp"

#include <cctype>

#include "weiljets/error.hpp"

namespace weiljets {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::NotCoordinateChange: return "NotCoordinateChange";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotEpimorphism: return "NotEpimorphism";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotInSubspace: return "NotInSubspace";
    case ErrorKind::EmptyQuotient: return "EmptyQuotient";
    case ErrorKind::HintTooSmall: return "HintTooSmall";
    case ErrorKind::FNotInIdeal: return "FNotInIdeal";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
        s = trim(s);
    }
    const auto slash = s.find('/');
    std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace weiljets
