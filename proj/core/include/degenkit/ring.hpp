#pragma once

// Exact arithmetic in the Grothendieck group of varieties and the projection
// into the Grothendieck group of strictly geometric triangulated categories.
//
// A VarElement is a finite integer combination of terms  c * L^k * [A]*[B]*...
// where L is the Lefschetz class and [A], [B] are atomic class labels
// registered in a Catalog. A SgtElement is a finite integer combination of
// basis labels; the basis label of the empty tuple is [pt] = [D^b(Spec k)].

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/numeric.hpp"

namespace degenkit {

class Catalog;

/// The distinguished label of a point; it denotes the unit class and is
/// never stored inside a monomial.
inline constexpr std::string_view kPointLabel = "pt";

bool is_valid_label_name(std::string_view name);

/// Sorted multiset of atomic labels. The empty multiset is the unit class [pt].
class ClassMonomial {
 public:
  ClassMonomial() = default;
  explicit ClassMonomial(std::vector<std::string> labels);

  static ClassMonomial of(std::string label);

  bool is_unit() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b);
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
  friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;

 private:
  std::vector<std::string> labels_;
};

struct TermKey {
  ClassMonomial monomial;
  unsigned lefschetz = 0;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Element of K0(Var). Canonical: no zero coefficients, terms ordered by
/// (monomial lexicographic, Lefschetz exponent ascending).
class VarElement {
 public:
  using TermMap = std::map<TermKey, Integer>;

  VarElement() = default;
  VarElement(long n);  // NOLINT(google-explicit-constructor): integers embed as multiples of [pt]
  explicit VarElement(const Integer& n);

  static VarElement lefschetz(unsigned exponent = 1);
  static VarElement label(std::string name);
  static VarElement term(const Integer& coefficient, ClassMonomial monomial, unsigned lefschetz);

  /// 1 + L + ... + L^(n-1), the class of P^(n-1); zero for n = 0.
  static VarElement lefschetz_sum(unsigned n);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const ClassMonomial& monomial, unsigned lefschetz) const;

  /// True when no atomic labels occur (a polynomial in L alone).
  bool is_label_free() const;

  VarElement& operator+=(const VarElement& other);
  VarElement& operator-=(const VarElement& other);
  VarElement& operator*=(const Integer& scalar);

  friend VarElement operator+(VarElement a, const VarElement& b) { return a += b; }
  friend VarElement operator-(VarElement a, const VarElement& b) { return a -= b; }
  friend VarElement operator*(VarElement a, const Integer& s) { return a *= s; }
  friend VarElement operator*(const Integer& s, VarElement a) { return a *= s; }
  friend VarElement operator*(const VarElement& a, const VarElement& b);
  VarElement operator-() const;

  friend bool operator==(const VarElement&, const VarElement&) = default;

  VarElement pow(unsigned exponent) const;

  /// Canonical text form, e.g. `1 + L + L^2 - 2*[E] + L*[E]`; zero is `0`.
  std::string to_string() const;

  /// Parses the canonical grammar; also accepts `1*` prefixes, `L^1`, `L^0`,
  /// factors in any order, and parenthesized sub-expressions with `^`.
  static VarElement parse(std::string_view text);

 private:
  void add_term(const TermKey& key, const Integer& coefficient);

  TermMap terms_;
};

/// Element of K0(sGT). Products of two or more opaque labels are formal tuple
/// basis labels; no relations among them are assumed.
class SgtElement {
 public:
  using TermMap = std::map<ClassMonomial, Integer>;

  SgtElement() = default;

  static SgtElement point(const Integer& multiple);
  static SgtElement basis(ClassMonomial label, const Integer& coefficient = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  Integer coefficient(const ClassMonomial& label) const;
  Integer point_coefficient() const { return coefficient(ClassMonomial{}); }

  SgtElement& operator+=(const SgtElement& other);
  SgtElement& operator-=(const SgtElement& other);
  SgtElement& operator*=(const Integer& scalar);
  friend SgtElement operator+(SgtElement a, const SgtElement& b) { return a += b; }
  friend SgtElement operator-(SgtElement a, const SgtElement& b) { return a -= b; }
  friend SgtElement operator*(const Integer& s, SgtElement a) { return a *= s; }
  friend bool operator==(const SgtElement&, const SgtElement&) = default;

  /// Formal product on basis tuples (multiset union); used to push products
  /// of labels through mu. Not a ring structure on K0(sGT).
  static SgtElement formal_product(const SgtElement& a, const SgtElement& b);

  /// Canonical text form, e.g. `24*[pt] - 2*[E]`; zero is `0`.
  std::string to_string() const;
  static SgtElement parse(std::string_view text);

 private:
  void add_term(const ClassMonomial& key, const Integer& coefficient);

  TermMap terms_;
};

/// mu: K0(Var)/(L-1) -> K0(sGT). L -> 1, expandable labels -> euler * [pt],
/// opaque labels -> their SOD reduction when the catalog gives one.
/// Throws Error(UnknownLabel) for unregistered labels.
SgtElement mu(const VarElement& a, const Catalog& catalog);

/// Euler characteristic ring homomorphism: L -> 1, [A] -> euler(A).
Integer euler(const VarElement& a, const Catalog& catalog);

/// Substitutes L -> 1 while keeping labels unexpanded.
VarElement reduce_mod_L_minus_1(const VarElement& a);

}  // namespace degenkit
