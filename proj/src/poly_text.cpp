#include "weiljets/poly_text.hpp"

#include <cctype>
#include <optional>

#include "weiljets/error.hpp"

namespace weiljets {

std::vector<std::string> default_variable_names(std::size_t n) {
    if (n <= 3) {
        static const char* short_names[] = {"x", "y", "z"};
        return std::vector<std::string>(short_names, short_names + n);
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> pair_variable_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
    return names;
}

namespace {

constexpr unsigned kParseBound = 256;

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_blanks();
        if (pos_ != text_.size()) error("unexpected character");
        return p.with_bound(p.degree());
    }

private:
    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError,
             what + " at position " + std::to_string(pos_) + " in polynomial '" + std::string(text_) + "'");
    }

    void skip_blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_blanks();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial constant(const Rational& c) const { return Polynomial::constant(names_.size(), kParseBound, c); }

    Polynomial expression() {
        Polynomial acc(names_.size(), kParseBound);
        bool first = true;
        for (;;) {
            char c = peek();
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
            } else if (!first) {
                return acc;
            }
            Polynomial t = term();
            if (negative) acc -= t;
            else acc += t;
            first = false;
        }
    }

    bool starts_factor(char c) const {
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = truncated_product(acc, factor(), kParseBound);
            } else if (starts_factor(c)) {
                acc = truncated_product(acc, factor(), kParseBound);
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_blanks();
            const auto e = integer();
            if (!e) error("expected exponent");
            Polynomial acc = constant(1);
            for (unsigned long k = 0; k < *e; ++k) acc = truncated_product(acc, base, kParseBound);
            if (acc.degree() >= kParseBound) error("degree too large");
            return acc;
        }
        return base;
    }

    std::optional<unsigned long> integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        if (pos_ - start > 9) error("integer literal too long for an exponent");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string literal(text_.substr(start, pos_ - start));
            std::size_t save = pos_;
            if (peek() == '/') {
                ++pos_;
                skip_blanks();
                std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (dstart == pos_) error("expected denominator");
                literal += "/" + std::string(text_.substr(dstart, pos_ - dstart));
            } else {
                pos_ = save;
            }
            return constant(parse_rational(literal));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name) return Polynomial::variable(names_.size(), kParseBound, i);
            if (name.size() > 1 && name[0] == 'x') {
                const std::string digits(name.substr(1));
                bool numeric = !digits.empty() && digits[0] != '0';
                for (char d : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
                if (numeric && digits.size() < 6) {
                    const std::size_t idx = std::stoul(digits);
                    if (idx >= 1 && idx <= names_.size()) return Polynomial::variable(names_.size(), kParseBound, idx - 1);
                }
            }
            pos_ = start;
            error("unknown variable '" + std::string(name) + "'");
        }
        error(c == '\0' ? "unexpected end of input" : "unexpected character");
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    if (names.empty()) fail(ErrorKind::VariableCountMismatch, "polynomials need at least one variable");
    return Parser(text, names).parse();
}

Polynomial parse_polynomial(std::string_view text, std::size_t variables) {
    return parse_polynomial(text, default_variable_names(variables));
}

std::string format_polynomial(const Polynomial& p) { return format_polynomial(p, default_variable_names(p.variables())); }

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (names.size() != p.variables()) fail(ErrorKind::VariableCountMismatch, "one name per variable is required");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) out += format_rational(magnitude);
        else if (magnitude == 1) out += mono;
        else out += format_rational(magnitude) + " " + mono;
    }
    return out;
}

}  // namespace weiljets
