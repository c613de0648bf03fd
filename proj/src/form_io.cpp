#include "feec/form_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace feec {

std::string variable_name(int axis, int n) {
  if (n <= 3) return std::string(1, static_cast<char>('x' + axis));
  return "x" + std::to_string(axis + 1);
}

std::string alternator_name(const Alternator& sigma, int n) {
  if (sigma.order() == 0) return "1";
  std::string s;
  for (int axis : sigma.axes()) s += "d" + variable_name(axis, n);
  return s;
}

namespace {

std::string render_monomial(const ExponentVector& alpha, const ExactScalar& c, bool leading) {
  const int n = alpha.dim();
  std::string factors;
  for (int i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    if (!factors.empty()) factors += "*";
    factors += variable_name(i, n);
    if (alpha[i] > 1) factors += "^" + std::to_string(alpha[i]);
  }
  const bool negative = sgn(c) < 0;
  ExactScalar magnitude = abs(c);
  std::string body;
  if (factors.empty())
    body = to_string(magnitude);
  else if (magnitude == 1)
    body = factors;
  else
    body = to_string(magnitude) + "*" + factors;
  if (leading) return negative ? "-" + body : body;
  return (negative ? " - " : " + ") + body;
}

}  // namespace

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool leading = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    s += render_monomial(it->first, it->second, leading);
    leading = false;
  }
  return s;
}

std::string render_text(const DifferentialForm& w) {
  if (w.is_zero()) return "0";
  const int n = w.ambient_dim();
  if (w.order() == 0) return render_polynomial(w.component(Alternator()));
  const bool several = w.components().size() > 1;
  std::string s;
  bool leading = true;
  for (const auto& [sigma, p] : w.components()) {
    const std::string alt = alternator_name(sigma, n);
    std::string piece;
    bool negative = false;
    if (p.size() == 1) {
      const auto& [alpha, c] = *p.terms().begin();
      negative = sgn(c) < 0;
      if (alpha.total_degree() == 0 && abs(c) == 1)
        piece = alt;
      else
        piece = render_monomial(alpha, abs(c), true) + " " + alt;
    } else if (several) {
      piece = "(" + render_polynomial(p) + ") " + alt;
    } else {
      piece = render_polynomial(p) + " " + alt;
    }
    if (leading)
      s += (negative ? "-" : "") + piece;
    else
      s += (negative ? " - " : " + ") + piece;
    leading = false;
  }
  return s;
}

std::vector<Alternator> table_columns(int n, int k) {
  auto cols = Alternator::all(k, n);
  if (n == 3 && k == 2) std::reverse(cols.begin(), cols.end());
  return cols;
}

namespace {

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const int n = p.ambient_dim();
  std::string s;
  bool leading = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    std::string factors;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      if (!factors.empty()) factors += " ";
      factors += variable_name(i, n);
      if (alpha[i] > 1) factors += "^{" + std::to_string(alpha[i]) + "}";
    }
    ExactScalar m = abs(c);
    std::string coeff;
    if (factors.empty() || m != 1) {
      coeff = is_integer(m) ? m.get_num().get_str()
                            : "\\frac{" + m.get_num().get_str() + "}{" + m.get_den().get_str() + "}";
    }
    std::string body = coeff.empty() ? factors : (factors.empty() ? coeff : coeff + " " + factors);
    if (leading)
      s += (sgn(c) < 0 ? "-" : "") + body;
    else
      s += (sgn(c) < 0 ? " - " : " + ") + body;
    leading = false;
  }
  return s;
}

}  // namespace

std::string render_latex_row(const DifferentialForm& w) {
  std::string s;
  bool first = true;
  for (const Alternator& sigma : table_columns(w.ambient_dim(), w.order())) {
    if (!first) s += " & ";
    s += "$" + latex_polynomial(w.component(sigma)) + "$";
    first = false;
  }
  return s + " \\\\";
}

std::string render_csv_row(const DifferentialForm& w) {
  std::string s;
  bool first = true;
  for (const Alternator& sigma : table_columns(w.ambient_dim(), w.order())) {
    if (!first) s += ",";
    s += "\"" + render_polynomial(w.component(sigma)) + "\"";
    first = false;
  }
  return s;
}

namespace {

// Element of the full exterior algebra over polynomials; products wedge.
using Mixed = std::map<Alternator, Polynomial>;

void accumulate(Mixed& m, const Alternator& sigma, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = m.try_emplace(sigma, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) m.erase(it);
}

Mixed multiply(const Mixed& a, const Mixed& b) {
  Mixed out;
  for (const auto& [sa, pa] : a)
    for (const auto& [sb, pb] : b) {
      auto merged = wedge_alternators(sa, sb);
      if (!merged) continue;
      Polynomial prod = pa * pb;
      if (merged->second < 0) prod = -prod;
      accumulate(out, merged->first, prod);
    }
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  Mixed parse() {
    Mixed value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

  // Sequence of differentials only, e.g. "dxdz".
  Alternator alternator() {
    Alternator acc;
    int sign = 1;
    skip_space();
    if (pos_ == text_.size()) fail("empty alternator");
    while (pos_ < text_.size()) {
      int axis = differential();
      if (axis < 0) fail("expected a differential");
      auto merged = wedge_alternators(acc, Alternator{axis});
      if (!merged) fail("repeated differential");
      acc = merged->first;
      sign *= merged->second;
    }
    if (sign < 0) fail("differentials must be listed in increasing order");
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse form \"" + text_ + "\" at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Mixed constant(const ExactScalar& c) {
    Mixed m;
    accumulate(m, Alternator(), Polynomial::constant(n_, c));
    return m;
  }

  // Variable at pos_ (without consuming); -1 if none.  Returns name length.
  int variable_at(std::size_t at, std::size_t& length) const {
    if (at >= text_.size()) return -1;
    const char ch = text_[at];
    if (n_ <= 3) {
      if (ch >= 'x' && ch <= 'z' && ch - 'x' < n_) {
        length = 1;
        return ch - 'x';
      }
      return -1;
    }
    if (ch != 'x') return -1;
    std::size_t end = at + 1;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == at + 1) return -1;
    const int index = std::stoi(text_.substr(at + 1, end - at - 1));
    if (index < 1 || index > n_) return -1;
    length = end - at;
    return index - 1;
  }

  // Consumes "d<var>" if present and returns the axis, else -1.
  int differential() {
    if (pos_ >= text_.size() || text_[pos_] != 'd') return -1;
    std::size_t length = 0;
    int axis = variable_at(pos_ + 1, length);
    if (axis < 0) return -1;
    pos_ += 1 + length;
    return axis;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    std::size_t length = 0;
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || ch == 'd' ||
           variable_at(pos_, length) >= 0;
  }

  Mixed expression() {
    skip_space();
    Mixed value;
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    value = product();
    if (negate) value = multiply(constant(-1), value);
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      const bool minus = text_[pos_] == '-';
      ++pos_;
      Mixed rhs = product();
      if (minus) rhs = multiply(constant(-1), rhs);
      for (const auto& [sigma, p] : rhs) accumulate(value, sigma, p);
    }
    return value;
  }

  Mixed product() {
    Mixed value = unary();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        value = multiply(value, unary());
      } else if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        ExactInteger den = integer();
        if (den == 0) fail("division by zero");
        value = multiply(value, constant(ExactScalar(1) / ExactScalar(den)));
      } else if (starts_factor()) {
        value = multiply(value, power());
      } else {
        break;
      }
    }
    return value;
  }

  Mixed unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return multiply(constant(-1), unary());
    }
    return power();
  }

  ExactInteger integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return ExactInteger(text_.substr(start, pos_ - start));
  }

  Mixed power() {
    Mixed base = primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      ExactInteger e = integer();
      if (!e.fits_sint_p() || e > 1000) fail("exponent too large");
      Mixed result = constant(1);
      for (long i = 0; i < e.get_si(); ++i) result = multiply(result, base);
      return result;
    }
    return base;
  }

  Mixed primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Mixed inner = expression();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return constant(ExactScalar(integer()));
    if (int axis = differential(); axis >= 0) {
      Mixed m;
      accumulate(m, Alternator{axis}, Polynomial::constant(n_, 1));
      return m;
    }
    std::size_t length = 0;
    if (int axis = variable_at(pos_, length); axis >= 0) {
      pos_ += length;
      Mixed m;
      accumulate(m, Alternator(), Polynomial::variable(n_, axis));
      return m;
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

Alternator parse_alternator(const std::string& name, int n) {
  if (name == "1") return Alternator();
  return Parser(name, n).alternator();
}

nlohmann::json integer_json(const ExactInteger& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ExactInteger integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return ExactInteger(j.get<long>());
  if (j.is_string()) {
    ExactInteger v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer in form JSON");
    return v;
  }
  throw std::invalid_argument("expected an integer in form JSON");
}

std::optional<Mixed> trailing_alternator_form(const std::string& text, int n) {
  const auto last = text.find_last_of(" \t");
  if (last == std::string::npos) return std::nullopt;
  try {
    const Alternator sigma = Parser(text.substr(last + 1), n).alternator();
    const Mixed prefix = Parser(text.substr(0, last), n).parse();
    Mixed out;
    for (const auto& [tau, p] : prefix) {
      if (tau.order() != 0) return std::nullopt;
      out.emplace(sigma, p);
    }
    return out;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

DifferentialForm parse_form(const std::string& text, int n, std::optional<int> order) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  Mixed value = Parser(text, n).parse();
  std::set<int> orders;
  for (const auto& entry : value) orders.insert(entry.first.order());
  if (orders.size() > 1) {
    // Single-component rendering "x + 1 dydz": the trailing alternator scales the whole sum.
    auto scaled = trailing_alternator_form(text, n);
    if (!scaled)
      throw std::invalid_argument("form \"" + text + "\" mixes orders " + std::to_string(*orders.begin()) +
                                  " and " + std::to_string(*orders.rbegin()));
    value = std::move(*scaled);
    orders = {value.begin()->first.order()};
  }
  std::optional<int> k = order;
  if (!orders.empty()) {
    if (k && *k != *orders.begin())
      throw std::invalid_argument("form \"" + text + "\" is not of order " + std::to_string(*k));
    k = *orders.begin();
  }
  DifferentialForm w(n, k.value_or(0));
  if (w.order() > n) throw std::invalid_argument("form order exceeds dimension");
  for (const auto& [sigma, p] : value) w.add_component(sigma, p);
  return w;
}

nlohmann::json form_to_json(const DifferentialForm& w) {
  nlohmann::json components = nlohmann::json::object();
  for (const auto& [sigma, p] : w.components()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : p.terms()) {
      terms.push_back({{"exps", std::vector<int>(alpha.entries().begin(), alpha.entries().end())},
                       {"num", integer_json(c.get_num())},
                       {"den", integer_json(c.get_den())}});
    }
    components[alternator_name(sigma, w.ambient_dim())] = std::move(terms);
  }
  return {{"n", w.ambient_dim()}, {"k", w.order()}, {"components", std::move(components)}};
}

DifferentialForm form_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("form JSON has invalid n/k");
    DifferentialForm w(n, k);
    for (const auto& [name, terms] : j.at("components").items()) {
      Alternator sigma = parse_alternator(name, n);
      Polynomial p(n);
      for (const auto& term : terms) {
        auto exps = term.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("exponent vector has wrong length");
        const ExactInteger den = term.contains("den") ? integer_from_json(term.at("den")) : ExactInteger(1);
        p.add_term(ExponentVector(std::move(exps)), make_scalar(integer_from_json(term.at("num")), den));
      }
      w.add_component(sigma, p);
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed form JSON: ") + e.what());
  }
}

}  // namespace feec
