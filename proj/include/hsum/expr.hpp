#pragma once

#include "hsum/polynomial.hpp"
#include "hsum/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsum {

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset)
    {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

/// Recursive descent over
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/' | <juxtaposition>) unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' (integer | '(' const-expr ')'))?
///   atom   := integer | 'm' | 'n' | 'x' | '(' expr ')'
/// Division is only by nonzero constants; "2n" and "n(n+1)" multiply implicitly.
class PolyParser
{
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant())
                    throw ParseError("division by a non-constant", at);
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                acc *= Rational(1) / d.coeff(0);
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    bool starts_atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        const auto c = static_cast<unsigned char>(text_[pos_]);
        return std::isalpha(c) || c == '_' || c == '(';
    }

    Polynomial unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (!accept('^'))
            return base;
        const unsigned long e = exponent();
        Polynomial r = Polynomial::constant(Rational(1));
        for (unsigned long i = 0; i < e; ++i)
            r = r * base;
        return r;
    }

    static constexpr unsigned long max_exponent = 1000;

    /// integer literal, or a parenthesized constant expression without '/'
    unsigned long exponent()
    {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            int depth = 0;
            for (std::size_t i = pos_; i < text_.size(); ++i) {
                if (text_[i] == '(')
                    ++depth;
                else if (text_[i] == ')' && --depth == 0)
                    break;
                else if (text_[i] == '/')
                    throw ParseError("division in exponent", i);
            }
            Polynomial e = atom();
            if (!e.is_constant() || !e.coeff(0).is_integer() || e.coeff(0).sign() < 0)
                throw ParseError("exponent must be a nonnegative integer", at);
            if (e.coeff(0) > Rational(static_cast<long>(max_exponent)))
                throw ParseError("exponent too large", at);
            return std::stoul(e.coeff(0).str());
        }
        const std::size_t digits = count_digits();
        if (digits == 0)
            throw ParseError("exponent must be a nonnegative integer", at);
        if (digits > 4)
            throw ParseError("exponent too large", at);
        const unsigned long e = std::stoul(std::string(text_.substr(at, digits)));
        if (e > max_exponent)
            throw ParseError("exponent too large", at);
        pos_ += digits;
        return e;
    }

    std::size_t count_digits() const
    {
        std::size_t n = 0;
        while (pos_ + n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + n])))
            ++n;
        return n;
    }

    Polynomial atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t digits = count_digits();
            Rational v = Rational::parse(text_.substr(pos_, digits));
            pos_ += digits;
            return Polynomial::constant(v);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 0;
            while (pos_ + n < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_ + n])) || text_[pos_ + n] == '_'))
                ++n;
            const std::string_view ident = text_.substr(pos_, n);
            if (ident != "m" && ident != "n" && ident != "x")
                throw ParseError("unknown identifier '" + std::string(ident) + "'", pos_);
            pos_ += n;
            return Polynomial::x();
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a univariate polynomial in m (or n, x). Coefficients are exact,
/// "a/b" included; whitespace is ignored.
inline Polynomial parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

} // namespace hsum
