#include "degenkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"

namespace degenkit {

bool is_valid_label_name(std::string_view name) {
  if (name.empty() || name.size() > 64) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

// ---------------------------------------------------------------------------
// ClassMonomial

ClassMonomial::ClassMonomial(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::erase(labels_, std::string(kPointLabel));
  std::sort(labels_.begin(), labels_.end());
}

ClassMonomial ClassMonomial::of(std::string label) { return ClassMonomial(std::vector<std::string>{std::move(label)}); }

ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b) {
  ClassMonomial out;
  out.labels_.reserve(a.labels_.size() + b.labels_.size());
  std::merge(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
             std::back_inserter(out.labels_));
  return out;
}

namespace {

constexpr std::size_t kMaxTerms = 100000;
constexpr unsigned kMaxLefschetzExponent = 4096;
constexpr unsigned kMaxGroupPower = 32;
constexpr int kMaxNesting = 32;

void append_factors(std::string& out, const Integer& abs_coefficient, unsigned lefschetz,
                    const ClassMonomial& monomial, bool point_as_label) {
  std::vector<std::string> factors;
  const bool bare = lefschetz == 0 && monomial.is_unit();
  if (abs_coefficient != 1 || (bare && !point_as_label)) factors.push_back(abs_coefficient.get_str());
  if (lefschetz == 1) {
    factors.emplace_back("L");
  } else if (lefschetz > 1) {
    factors.push_back("L^" + std::to_string(lefschetz));
  }
  if (monomial.is_unit() && point_as_label) factors.push_back("[pt]");
  for (const auto& label : monomial.labels()) factors.push_back("[" + label + "]");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '*';
    out += factors[i];
  }
}

void append_signed(std::string& out, bool first, const Integer& coefficient) {
  if (first) {
    if (coefficient < 0) out += '-';
  } else {
    out += coefficient < 0 ? " - " : " + ";
  }
}

// Recursive-descent parser for the term grammar.
class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  VarElement parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    VarElement value = expression(0);
    skip_space();
    if (!at_end()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, what + " at offset " + std::to_string(pos_) + " in '" +
                                 std::string(text_.substr(0, 80)) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void check_size(const VarElement& v) const {
    if (v.size() > kMaxTerms) fail("expression too large");
  }

  VarElement expression(int depth) {
    if (depth > kMaxNesting) fail("nesting too deep");
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    VarElement acc = term(depth);
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      VarElement rhs = term(depth);
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
      check_size(acc);
    }
    return acc;
  }

  VarElement term(int depth) {
    VarElement acc = factor(depth);
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor(depth);
      check_size(acc);
    }
    return acc;
  }

  unsigned exponent(unsigned limit) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) fail("exponent too large");
    const unsigned value = static_cast<unsigned>(std::stoul(std::string(digits)));
    if (value > limit) fail("exponent too large");
    return value;
  }

  VarElement factor(int depth) {
    skip_space();
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ - start > 4096) fail("integer too long");
      return VarElement(Integer(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (ch == 'L') {
      ++pos_;
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        fail("bare identifier (labels are written [name])");
      }
      skip_space();
      unsigned k = 1;
      if (peek() == '^') {
        ++pos_;
        k = exponent(kMaxLefschetzExponent);
      }
      return VarElement::lefschetz(k);
    }
    if (ch == '[') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && peek() != ']') ++pos_;
      if (at_end()) fail("unterminated label");
      const std::string_view name = text_.substr(start, pos_ - start);
      ++pos_;
      if (!is_valid_label_name(name)) fail("invalid label name");
      return VarElement::label(std::string(name));
    }
    if (ch == '(') {
      ++pos_;
      VarElement inner = expression(depth + 1);
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        const unsigned k = exponent(kMaxGroupPower);
        VarElement result(1);
        for (unsigned i = 0; i < k; ++i) {
          result = result * inner;
          check_size(result);
        }
        return result;
      }
      return inner;
    }
    fail(at_end() ? "unexpected end of expression" : "unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// VarElement

VarElement::VarElement(long n) : VarElement(Integer(n)) {}

VarElement::VarElement(const Integer& n) {
  if (n != 0) terms_.emplace(TermKey{}, n);
}

VarElement VarElement::lefschetz(unsigned exponent) { return term(1, ClassMonomial{}, exponent); }

VarElement VarElement::label(std::string name) {
  if (name == kPointLabel) return VarElement(1);
  return term(1, ClassMonomial::of(std::move(name)), 0);
}

VarElement VarElement::term(const Integer& coefficient, ClassMonomial monomial, unsigned lefschetz) {
  VarElement out;
  out.add_term(TermKey{std::move(monomial), lefschetz}, coefficient);
  return out;
}

VarElement VarElement::lefschetz_sum(unsigned n) {
  VarElement out;
  for (unsigned k = 0; k < n; ++k) out.add_term(TermKey{ClassMonomial{}, k}, 1);
  return out;
}

Integer VarElement::coefficient(const ClassMonomial& monomial, unsigned lefschetz) const {
  auto it = terms_.find(TermKey{monomial, lefschetz});
  return it == terms_.end() ? Integer(0) : it->second;
}

bool VarElement::is_label_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.monomial.is_unit(); });
}

void VarElement::add_term(const TermKey& key, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

VarElement& VarElement::operator+=(const VarElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

VarElement& VarElement::operator-=(const VarElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

VarElement& VarElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

VarElement VarElement::operator-() const {
  VarElement out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

VarElement operator*(const VarElement& a, const VarElement& b) {
  VarElement out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(TermKey{ka.monomial * kb.monomial, ka.lefschetz + kb.lefschetz}, ca * cb);
    }
  }
  return out;
}

VarElement VarElement::pow(unsigned exponent) const {
  VarElement result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string VarElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_signed(out, first, c);
    append_factors(out, abs(c), key.lefschetz, key.monomial, /*point_as_label=*/false);
    first = false;
  }
  return out;
}

VarElement VarElement::parse(std::string_view text) { return TermParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// SgtElement

SgtElement SgtElement::point(const Integer& multiple) { return basis(ClassMonomial{}, multiple); }

SgtElement SgtElement::basis(ClassMonomial label, const Integer& coefficient) {
  SgtElement out;
  out.add_term(label, coefficient);
  return out;
}

Integer SgtElement::coefficient(const ClassMonomial& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SgtElement::add_term(const ClassMonomial& key, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SgtElement& SgtElement::operator+=(const SgtElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

SgtElement& SgtElement::operator-=(const SgtElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

SgtElement& SgtElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

SgtElement SgtElement::formal_product(const SgtElement& a, const SgtElement& b) {
  SgtElement out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka * kb, ca * cb);
  return out;
}

std::string SgtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_signed(out, first, c);
    append_factors(out, abs(c), 0, key, /*point_as_label=*/true);
    first = false;
  }
  return out;
}

SgtElement SgtElement::parse(std::string_view text) {
  const VarElement v = VarElement::parse(text);
  SgtElement out;
  for (const auto& [key, c] : v.terms()) {
    if (key.lefschetz != 0) {
      throw Error(Errc::Parse, "L does not occur in K0(sGT) classes: '" + std::string(text.substr(0, 80)) + "'");
    }
    out.add_term(key.monomial, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

SgtElement mu(const VarElement& a, const Catalog& catalog) {
  SgtElement out;
  for (const auto& [key, c] : a.terms()) {
    SgtElement image = SgtElement::point(c);
    for (const auto& label : key.monomial.labels()) {
      image = SgtElement::formal_product(image, catalog.sgt_class(label));
    }
    out += image;
  }
  return out;
}

Integer euler(const VarElement& a, const Catalog& catalog) {
  Integer total = 0;
  for (const auto& [key, c] : a.terms()) {
    Integer product = c;
    for (const auto& label : key.monomial.labels()) product *= catalog.at(label).euler;
    total += product;
  }
  return total;
}

VarElement reduce_mod_L_minus_1(const VarElement& a) {
  VarElement out;
  for (const auto& [key, c] : a.terms()) out += VarElement::term(c, key.monomial, 0);
  return out;
}

}  // namespace degenkit
