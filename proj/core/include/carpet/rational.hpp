// Copyright 2026 The carpetcurl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace carpet {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den);

// Accepts "p/q", "p" and plain decimals like "0.25".
std::optional<Rational> parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Fixed-point decimal rendering, rounded half away from zero, trailing zeros
// trimmed. Used by the SVG writer so output never depends on libc printf.
std::string to_decimal(const Rational& q, int digits);

// Returns nullopt when the value does not fit in int64.
std::optional<std::int64_t> to_int64(const Integer& z);

}  // namespace carpet
