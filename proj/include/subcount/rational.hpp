#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "subcount/error.hpp"

namespace subcount {

// Exact rational arithmetic. All cover/matching LP work is done in Rat;
// doubles only appear once sampling probabilities are materialized.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(Errc::Malformed, "rational with zero denominator");
  return Rat(num, den);
}

// "3/2" or "2"; used by pattern/CLI surfaces.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Errc::Malformed, "rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Errc::Malformed, "bad rational literal: " + s);
  }
}

// Serialization stores (num, den) as int64 pairs; covers of desk-scale
// patterns never leave that range.
inline std::int64_t rat_num_i64(const Rat& r) {
  Int n = numerator(r);
  if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max())
    fail(Errc::TooLarge, "rational numerator exceeds 64 bits");
  return n.convert_to<std::int64_t>();
}

inline std::int64_t rat_den_i64(const Rat& r) {
  Int d = denominator(r);
  if (d > std::numeric_limits<std::int64_t>::max())
    fail(Errc::TooLarge, "rational denominator exceeds 64 bits");
  return d.convert_to<std::int64_t>();
}

}  // namespace subcount
