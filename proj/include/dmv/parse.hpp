#ifndef DMV_PARSE_HPP
#define DMV_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "dmv/formula.hpp"
#include "dmv/rational.hpp"

// Recursive-descent parsers for the two concrete syntaxes.
//
// Variables: x0, x1, ...  Connectives, tightest to loosest:
//   unary  ~  nabla(p/q)  Delta(p/q)  delta(n)
//   *   +   /\   \/   ->  (right-associative)   <->
// Parentheses group as usual.

namespace dmv {

struct SyntaxError : ParseError {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : ParseError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

template <class F>
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    typename F::Ptr parse() {
        auto phi = parse_iff();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return phi;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            // Word tokens must not run into following identifier characters.
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                std::size_t end = pos_ + tok.size();
                if (end < text_.size() &&
                    std::isalnum(static_cast<unsigned char>(text_[end])))
                    return false;
            }
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string read_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    // "p/q" or "p" between the parentheses of nabla/Delta.
    UnitRational read_unit_rational() {
        std::string p = read_number();
        skip_ws();
        std::string lit = p;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            lit += "/" + read_number();
        }
        std::size_t at = pos_;
        try {
            return parse_unit_rational(lit);
        } catch (const ParseError& e) {
            throw SyntaxError(e.what(), at);
        }
    }

    typename F::Ptr parse_iff() {
        auto lhs = parse_implies();
        while (try_consume("<->")) lhs = F::iff(lhs, parse_implies());
        return lhs;
    }

    typename F::Ptr parse_implies() {  // right-associative
        auto lhs = parse_or();
        skip_ws();
        if (text_.substr(pos_, 3) == "<->") return lhs;  // leave for parse_iff
        if (try_consume("->")) return F::implies(lhs, parse_implies());
        return lhs;
    }

    typename F::Ptr parse_or() {
        auto lhs = parse_and();
        while (try_consume("\\/")) lhs = F::join(lhs, parse_and());
        return lhs;
    }

    typename F::Ptr parse_and() {
        auto lhs = parse_plus();
        while (try_consume("/\\")) lhs = F::meet(lhs, parse_plus());
        return lhs;
    }

    typename F::Ptr parse_plus() {
        auto lhs = parse_times();
        while (try_consume("+")) lhs = F::plus(lhs, parse_times());
        return lhs;
    }

    typename F::Ptr parse_times() {
        auto lhs = parse_unary();
        while (try_consume("*")) lhs = F::times(lhs, parse_unary());
        return lhs;
    }

    typename F::Ptr parse_unary() {
        skip_ws();
        if (try_consume("~")) return F::neg(parse_unary());
        if (try_consume("nabla")) {
            expect('(');
            UnitRational r = read_unit_rational();
            expect(')');
            return make_nabla(std::move(r));
        }
        if (try_consume("Delta")) {
            expect('(');
            UnitRational r = read_unit_rational();
            expect(')');
            return make_delta_r(std::move(r));
        }
        if (try_consume("delta")) {
            expect('(');
            std::size_t at = pos_;
            unsigned long n = std::stoul(read_number());
            if (n == 0) throw SyntaxError("delta subscript must be >= 1", at);
            expect(')');
            return make_delta_n(n);
        }
        if (try_consume("(")) {
            auto phi = parse_iff();
            expect(')');
            return phi;
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'x') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected variable index after 'x'");
            return F::var(std::stoul(std::string(text_.substr(start, pos_ - start))));
        }
        fail("expected a formula");
    }

    typename F::Ptr make_nabla(UnitRational r);
    typename F::Ptr make_delta_r(UnitRational r);
    typename F::Ptr make_delta_n(unsigned long n);
};

template <>
inline Formula::Ptr Parser<Formula>::make_nabla(UnitRational r) {
    return Formula::nabla(std::move(r), parse_unary());
}
template <>
inline Formula::Ptr Parser<Formula>::make_delta_r(UnitRational r) {
    return Formula::delta_r(std::move(r), parse_unary());
}
template <>
inline Formula::Ptr Parser<Formula>::make_delta_n(unsigned long) {
    fail("'delta(n)' belongs to the ratluk language; use nabla/Delta here");
}

template <>
inline DFormula::Ptr Parser<DFormula>::make_nabla(UnitRational) {
    fail("'nabla' belongs to the ql language; use delta(n) here");
}
template <>
inline DFormula::Ptr Parser<DFormula>::make_delta_r(UnitRational) {
    fail("'Delta' belongs to the ql language; use delta(n) here");
}
template <>
inline DFormula::Ptr Parser<DFormula>::make_delta_n(unsigned long n) {
    return DFormula::delta_n(n, parse_unary());
}

}  // namespace detail

inline Formula::Ptr parse_ql(std::string_view text) {
    return detail::Parser<Formula>(text).parse();
}

inline DFormula::Ptr parse_ratluk(std::string_view text) {
    return detail::Parser<DFormula>(text).parse();
}

}  // namespace dmv

#endif
