#include "degenkit/keyvalue.hpp"

#include <algorithm>

#include "degenkit/error.hpp"

namespace degenkit::kv {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char delimiter) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(delimiter, start);
    parts.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void check_text(std::string_view text) {
  std::size_t i = 0;
  int line = 1;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte < 0x80) {
      if (byte == '\n') ++line;
      if ((byte < 0x20 && byte != '\t' && byte != '\n' && byte != '\r') || byte == 0x7f) {
        fail(line, "control character in input");
      }
      ++i;
      continue;
    }
    std::size_t extra = 0;
    unsigned min_code = 0;
    unsigned code = 0;
    if ((byte & 0xE0) == 0xC0) {
      extra = 1;
      min_code = 0x80;
      code = byte & 0x1F;
    } else if ((byte & 0xF0) == 0xE0) {
      extra = 2;
      min_code = 0x800;
      code = byte & 0x0F;
    } else if ((byte & 0xF8) == 0xF0) {
      extra = 3;
      min_code = 0x10000;
      code = byte & 0x07;
    } else {
      fail(line, "invalid UTF-8");
    }
    if (i + extra >= text.size()) fail(line, "truncated UTF-8 sequence");
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) fail(line, "invalid UTF-8");
      code = (code << 6) | (cont & 0x3F);
    }
    if (code < min_code || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) fail(line, "invalid UTF-8");
    i += extra + 1;
  }
}

const Entry* Section::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.value && e.key == key) return &e;
  }
  return nullptr;
}

const std::string& Section::require(std::string_view key) const {
  const Entry* e = find(key);
  if (e == nullptr) {
    throw Error(Errc::Parse, "missing key '" + std::string(key) + "'" +
                                 (name.empty() ? std::string() : " in section [" + name + "]"));
  }
  return *e->value;
}

std::optional<std::string> Section::get(std::string_view key) const {
  const Entry* e = find(key);
  if (e == nullptr) return std::nullopt;
  return e->value;
}

void Section::expect_keys(std::initializer_list<std::string_view> allowed, bool allow_bare) const {
  for (const auto& e : entries) {
    if (!e.value) {
      if (!allow_bare) fail(e.line, "unexpected entry '" + e.key + "'");
      continue;
    }
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end()) {
      fail(e.line, "unknown key '" + e.key + "'");
    }
  }
}

void Section::expect_only_pairs() const {
  for (const auto& e : entries) {
    if (!e.value) fail(e.line, "expected 'key = value', got '" + e.key + "'");
  }
}

void Section::expect_only_bare() const {
  for (const auto& e : entries) {
    if (e.value) fail(e.line, "unexpected '=' in list section [" + name + "]");
  }
}

Document Document::parse(std::string_view text) {
  check_text(text);
  Document doc;
  Section* current = &doc.root_;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) fail(line_no, "malformed section header");
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name.empty() || name.find_first_of("[]=") != std::string_view::npos) {
        fail(line_no, "malformed section header");
      }
      for (const auto& s : doc.sections_) {
        if (s.name == name) fail(line_no, "duplicate section [" + std::string(name) + "]");
      }
      doc.sections_.push_back(Section{std::string(name), {}, line_no});
      current = &doc.sections_.back();
      continue;
    }

    if (line.find_first_of("[]") != std::string_view::npos && line.find('=') == std::string_view::npos) {
      fail(line_no, "stray bracket");
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      current->entries.push_back(Entry{std::string(line), std::nullopt, line_no});
      continue;
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for key '" + std::string(key) + "'");
    if (value.find('=') != std::string_view::npos) fail(line_no, "more than one '='");
    if (current->find(key) != nullptr) fail(line_no, "duplicate key '" + std::string(key) + "'");
    current->entries.push_back(Entry{std::string(key), std::string(value), line_no});
  }
  return doc;
}

const Section* Document::section(std::string_view name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void Document::expect_sections(std::initializer_list<std::string_view> allowed) const {
  for (const auto& s : sections_) {
    if (std::find(allowed.begin(), allowed.end(), s.name) == allowed.end()) {
      fail(s.line, "unknown section [" + s.name + "]");
    }
  }
}

}  // namespace degenkit::kv
