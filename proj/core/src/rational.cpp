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

#include "carpet/rational.hpp"

#include <cctype>
#include <limits>

namespace carpet {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    out = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      return std::nullopt;
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    out = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    out = Rational(Integer(std::string(text), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(q) * scale;
  // round half away from zero
  Integer r = floor(scaled + Rational(1, 2));
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string whole = s.substr(0, s.size() - digits);
  std::string frac = s.substr(s.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (q < 0 && r != 0) ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::optional<std::int64_t> to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  if (z.fits_slong_p()) return z.get_si();
  return std::nullopt;
}

}  // namespace carpet
