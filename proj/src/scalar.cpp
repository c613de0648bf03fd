#include "feec/scalar.hpp"

#include <stdexcept>

namespace feec {

ExactScalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  ExactScalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

ExactScalar make_scalar(const ExactInteger& numerator, const ExactInteger& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  ExactScalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactScalar& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

ExactScalar parse_scalar(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_scalar(ExactInteger(text), ExactInteger(1));
    return make_scalar(ExactInteger(text.substr(0, slash)), ExactInteger(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

}  // namespace feec
