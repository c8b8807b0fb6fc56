#pragma once

// Line-oriented structured text used by catalog, model, and orbit files:
//
//   # comment
//   key = value
//   [section]
//   key = value
//   bare entry
//
// Keys are unique within a section; bare entries form an ordered list.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degenkit::kv {

struct Entry {
  std::string key;
  std::optional<std::string> value;  // nullopt for bare entries
  int line = 0;
};

struct Section {
  std::string name;  // empty for the top-level section
  std::vector<Entry> entries;
  int line = 0;

  const Entry* find(std::string_view key) const;
  /// Value of `key`; throws Error(Parse) when absent or bare.
  const std::string& require(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;

  /// Throws Error(Parse) on keys outside `allowed`, or on bare entries
  /// unless `allow_bare`.
  void expect_keys(std::initializer_list<std::string_view> allowed, bool allow_bare = false) const;
  void expect_only_pairs() const;
  void expect_only_bare() const;
};

class Document {
 public:
  static Document parse(std::string_view text);

  const Section& root() const noexcept { return root_; }
  const std::vector<Section>& sections() const noexcept { return sections_; }
  const Section* section(std::string_view name) const;

  /// Throws Error(Parse) if any section name is outside `allowed`.
  void expect_sections(std::initializer_list<std::string_view> allowed) const;

 private:
  Section root_;
  std::vector<Section> sections_;
};

/// Rejects text that is not UTF-8 or that contains control characters other
/// than tab, CR and LF. Throws Error(Parse).
void check_text(std::string_view text);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char delimiter);

}  // namespace degenkit::kv
