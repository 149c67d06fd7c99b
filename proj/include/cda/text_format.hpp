/*
   Copyright 2026 The cda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Parser for the textual element format produced by `to_string`:
//
//   F_p:      "5"            (any integer or fraction, reduced mod p)
//   Q:        "-3/4"
//   series:   "3*t^(-1) + 2 + 5*t^(3/7) + O(t^5)"
//   towers:   "(1 + 2*x)*t^2 + x*t^3"   inner coefficients in parentheses, or
//                                       a bare inner term such as "x" or "3*x^2"

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cda/base_fields.hpp"
#include "cda/series.hpp"

namespace cda {

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(normalize_minus(text)) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])) != 0) ++i_;
    }
    [[nodiscard]] bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    [[nodiscard]] char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[nodiscard]] bool at_identifier() {
        const char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    /// Identifier at the cursor without consuming it.
    [[nodiscard]] std::string look_identifier() {
        skip_ws();
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) != 0 || s_[j] == '_')) ++j;
        return s_.substr(i_, j - i_);
    }
    std::string identifier() {
        std::string id = look_identifier();
        if (id.empty()) fail("expected a variable name");
        i_ += id.size();
        return id;
    }
    /// True when the cursor is at "* <name>" (used to decide who owns a '*').
    [[nodiscard]] bool at_times_identifier(const std::string& name) {
        const std::size_t save = i_;
        bool ok = false;
        if (eat('*')) ok = look_identifier() == name;
        i_ = save;
        return ok;
    }
    /// True when the cursor is at "O(".
    [[nodiscard]] bool at_big_o() {
        skip_ws();
        std::size_t j = i_;
        if (j >= s_.size() || s_[j] != 'O') return false;
        ++j;
        while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j])) != 0) ++j;
        return j < s_.size() && s_[j] == '(';
    }
    mpz_class digits() {
        skip_ws();
        const std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])) != 0) ++i_;
        if (b == i_) fail("expected a number");
        return mpz_class(s_.substr(b, i_ - b), 10);
    }
    /// Unsigned "n" or "n/d".
    Rational unsigned_rational() {
        mpz_class num = digits();
        if (peek() == '/') {
            ++i_;
            return Rational(num, digits());
        }
        return Rational(num);
    }
    Rational signed_rational() {
        const bool neg = eat('-');
        if (!neg) eat('+');
        Rational r = unsigned_rational();
        return neg ? -r : r;
    }
    /// Optional "^e", "^-e" or "^(e)"; defaults to 1.
    Rational exponent() {
        if (!eat('^')) return Rational(1);
        if (eat('(')) {
            Rational e = signed_rational();
            expect(')');
            return e;
        }
        return signed_rational();
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse error at offset " + std::to_string(i_) + " in '" + s_ + "': " + what);
    }

private:
    std::string s_;
    std::size_t i_ = 0;
};

inline PrimeFieldElement parse_factor(const PrimeField& f, Cursor& c) {
    if (c.eat('(')) {
        auto r = c.signed_rational();
        c.expect(')');
        return f.from_rational(r);
    }
    return f.from_rational(c.unsigned_rational());
}

inline Rational parse_factor(const RationalField&, Cursor& c) {
    if (c.eat('(')) {
        auto r = c.signed_rational();
        c.expect(')');
        return r;
    }
    return c.unsigned_rational();
}

template <class C>
Series<C> parse_sum(const SeriesField<C>& f, Cursor& c);

template <class C>
Series<C> parse_term(const SeriesField<C>& f, Cursor& c);

template <class C>
Series<C> parse_factor(const SeriesField<C>& f, Cursor& c) {
    if (c.eat('(')) {
        Series<C> s = parse_sum(f, c);
        c.expect(')');
        return s;
    }
    return parse_term(f, c);
}

template <class C>
Series<C> parse_term(const SeriesField<C>& f, Cursor& c) {
    if (c.at_big_o()) {
        c.identifier();
        c.expect('(');
        if (c.identifier() != f.var()) c.fail("O-term must use variable " + f.var());
        const Rational prec = c.exponent();
        c.expect(')');
        return f.zero_to(prec);
    }
    if (c.at_identifier() && c.look_identifier() == f.var()) {
        c.identifier();
        return f.monomial(f.coefficients().one(), c.exponent());
    }
    if constexpr (!is_series_v<typename C::element_type>) {
        // A parenthesized group over a flat coefficient field is a sum in f itself.
        if (c.eat('(')) {
            Series<C> group = parse_sum(f, c);
            c.expect(')');
            if (c.at_times_identifier(f.var())) {
                c.expect('*');
                c.identifier();
                return group * f.monomial(f.coefficients().one(), c.exponent());
            }
            return group;
        }
    }
    auto coeff = parse_factor(f.coefficients(), c);
    if (c.at_times_identifier(f.var())) {
        c.expect('*');
        c.identifier();
        return f.monomial(coeff, c.exponent());
    }
    return f.constant(coeff);
}

template <class C>
Series<C> parse_sum(const SeriesField<C>& f, Cursor& c) {
    Series<C> acc = f.zero();
    bool first = true;
    while (true) {
        bool negative = false;
        if (c.eat('-')) {
            negative = true;
        } else if (!c.eat('+') && !first) {
            break;
        }
        Series<C> term = parse_term(f, c);
        acc = negative ? acc - term : acc + term;
        first = false;
        const char next = c.peek();
        if (next != '+' && next != '-') break;
    }
    return acc;
}

inline PrimeFieldElement parse_value(const PrimeField& f, Cursor& c) { return f.from_rational(c.signed_rational()); }
inline Rational parse_value(const RationalField&, Cursor& c) { return c.signed_rational(); }
template <class C>
Series<C> parse_value(const SeriesField<C>& f, Cursor& c) {
    return parse_sum(f, c);
}

}  // namespace detail

/// Parses one element of `field` from its textual form.
template <class F>
[[nodiscard]] typename F::element_type parse_element(const F& field, std::string_view text) {
    detail::Cursor c(text);
    auto out = detail::parse_value(field, c);
    if (!c.at_end()) c.fail("trailing characters");
    return out;
}

/// Splits "[a; b; c]" or "a, b, c" at top-level separators.
[[nodiscard]] inline std::vector<std::string> split_coordinates(std::string_view text) {
    std::string s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == ';' || ch == ',')) {
            out.push_back(detail::trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!detail::trim(cur).empty() || !out.empty()) out.push_back(detail::trim(cur));
    return out;
}

template <class F>
[[nodiscard]] std::vector<typename F::element_type> parse_coordinates(const F& field, std::string_view text) {
    std::vector<typename F::element_type> out;
    for (const auto& part : split_coordinates(text)) out.push_back(parse_element(field, part));
    return out;
}

}  // namespace cda
