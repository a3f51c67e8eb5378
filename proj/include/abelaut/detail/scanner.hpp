#pragma once

#include "abelaut/error.hpp"
#include "abelaut/scalars/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace abelaut::detail {

// Character cursor shared by the small text grammars (cyclotomic numbers,
// polynomials, surds). Errors report the character offset.
class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    unsigned long parse_unsigned() {
        skip_ws();
        const std::size_t start = pos_;
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1'000'000'000UL) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected digits");
        return v;
    }

    // Unsigned rational literal: digits ['/' digits].
    Rational parse_rational_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        std::string literal(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) fail("expected a denominator");
            literal += "/";
            literal += text_.substr(dstart, pos_ - dstart);
        }
        try {
            return Rational::parse(literal);
        } catch (const ParseError&) {
            fail("malformed rational '" + literal + "'");
        }
    }

    std::size_t position() const noexcept { return pos_; }
    std::string_view text() const noexcept { return text_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in '" + std::string(text_) + "'", "offset " + std::to_string(pos_));
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace abelaut::detail
