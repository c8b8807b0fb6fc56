#include "degenkit/matrix_io.hpp"

#include <algorithm>
#include <vector>

#include "degenkit/error.hpp"
#include "degenkit/keyvalue.hpp"

namespace degenkit {
namespace {

constexpr long kMaxDimension = 4096;

std::vector<std::string_view> tokenize(std::string_view text) {
  kv::check_text(text);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r' &&
           text[i] != '#')
      ++i;
    tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

template <typename T, typename ParseEntry>
Matrix<T> read_matrix(const std::vector<std::string_view>& tokens, std::size_t& pos, ParseEntry parse_entry) {
  if (pos + 2 > tokens.size()) throw Error(Errc::Parse, "missing matrix header 'rows cols'");
  const long rows = parse_small_int(tokens[pos], 0, kMaxDimension, "rows");
  const long cols = parse_small_int(tokens[pos + 1], 0, kMaxDimension, "cols");
  pos += 2;
  const auto count = static_cast<std::size_t>(rows * cols);
  if (tokens.size() - pos < count) {
    throw Error(Errc::Parse, "matrix declares " + std::to_string(count) + " entries but fewer are present");
  }
  std::vector<T> data;
  data.reserve(count);
  for (std::size_t k = 0; k < count; ++k) data.push_back(parse_entry(tokens[pos + k]));
  pos += count;
  return Matrix<T>(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(data));
}

template <typename T, typename ParseEntry>
Matrix<T> parse_single(std::string_view text, ParseEntry parse_entry) {
  const auto tokens = tokenize(text);
  std::size_t pos = 0;
  Matrix<T> m = read_matrix<T>(tokens, pos, parse_entry);
  if (pos != tokens.size()) throw Error(Errc::Parse, "trailing data after matrix: '" + std::string(tokens[pos].substr(0, 40)) + "'");
  return m;
}

template <typename T>
std::string write_any(const Matrix<T>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) { return parse_single<Integer>(text, parse_integer); }

RatMatrix parse_rational_matrix(std::string_view text) { return parse_single<Rational>(text, parse_rational); }

std::string write_matrix(const IntMatrix& m) { return write_any(m); }
std::string write_matrix(const RatMatrix& m) { return write_any(m); }

std::map<std::string, IntMatrix> parse_labeled_matrices(std::string_view text,
                                                        std::initializer_list<std::string_view> names) {
  const auto tokens = tokenize(text);
  std::map<std::string, IntMatrix> out;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::string name(tokens[pos]);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(Errc::Parse, "unexpected section label '" + name.substr(0, 40) + "'");
    }
    if (out.contains(name)) throw Error(Errc::Parse, "section " + name + " appears twice");
    ++pos;
    out.emplace(name, read_matrix<Integer>(tokens, pos, parse_integer));
  }
  for (auto name : names) {
    if (!out.contains(std::string(name))) throw Error(Errc::Parse, "missing section " + std::string(name));
  }
  return out;
}

}  // namespace degenkit
