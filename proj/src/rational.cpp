#include "ccm/rational.hpp"

#include <regex>

namespace ccm {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) fail(ErrorKind::kParse, "not a rational number: \"" + text + "\"");
  const BigInt num(m[1].str());
  const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) fail(ErrorKind::kParse, "zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

}  // namespace ccm
