/*
 * Copyright 2026 the frobstruct authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cctype>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobstruct/errors.hpp"

namespace frobstruct {

/// Exact arithmetic throughout: arbitrary-precision integers and rationals,
/// always kept in canonical form (gcd 1, positive denominator).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q", or "p" when the denominator is 1. Never decimal.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p", "-p", "p/q", "-p/q", with surrounding whitespace ignored.
/// Rejects anything else, in particular decimal notation.
inline Rational parse_rational(const std::string& raw) {
    const auto fail = [&] { throw ParseError("invalid rational literal: '" + raw + "'"); };
    std::size_t begin = 0, end = raw.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    if (begin == end) fail();
    const std::string s = raw.substr(begin, end - begin);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t num_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++num_digits;
    if (num_digits == 0) fail();
    if (i == s.size()) return Rational(s);
    if (s[i] != '/') fail();
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) fail();
    if (Integer(s.substr(s.find('/') + 1)) == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(s);
}

} // namespace frobstruct
