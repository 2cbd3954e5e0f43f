#include "dilabel/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace dilabel {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> to_number(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Label abs_diff(Label a, Label b) { return a > b ? a - b : b - a; }

}  // namespace

Separation::Separation(unsigned j, unsigned k) : j_(j), k_(k) {
  if (k < 1 || j < k) {
    throw LabelingError(LabelingErrorKind::InvalidSeparation,
                        "separation requires j >= k >= 1 (got j=" + std::to_string(j) +
                            ", k=" + std::to_string(k) + ")");
  }
}

Label Labeling::min_label() const {
  return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
}

Label Labeling::max_label() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<Violation> verify(const Digraph& d, const Labeling& f) {
  if (f.size() != d.num_vertices()) {
    throw LabelingError(LabelingErrorKind::MissingLabel,
                        "labeling has " + std::to_string(f.size()) + " labels for " +
                            std::to_string(d.num_vertices()) + " vertices");
  }
  std::vector<Violation> violations;
  const auto pairs = distance_pairs(d);
  for (const Edge& e : pairs.at_one) {
    Label diff = abs_diff(f[e.from], f[e.to]);
    if (diff < f.j()) violations.push_back({e.from, e.to, 1, f.j(), diff});
  }
  for (const Edge& e : pairs.at_two) {
    Label diff = abs_diff(f[e.from], f[e.to]);
    if (diff < f.k()) violations.push_back({e.from, e.to, 2, f.k(), diff});
  }
  return violations;
}

Labeling normalize(const Labeling& f) {
  const Label low = f.min_label();
  std::vector<Label> shifted(f.values().begin(), f.values().end());
  for (Label& x : shifted) x -= low;
  return Labeling(std::move(shifted), f.separation());
}

Labeling parse_labeling(std::string_view text, std::size_t n, Separation sep) {
  std::vector<std::optional<Label>> labels(n);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw LabelingError(LabelingErrorKind::Syntax, where + "expected 'vertex: label'");
    }
    auto vertex = to_number(trim(line.substr(0, colon)));
    auto label = to_number(trim(line.substr(colon + 1)));
    if (!vertex || !label || *label > std::numeric_limits<Label>::max()) {
      throw LabelingError(LabelingErrorKind::Syntax,
                          where + "expected two non-negative integers 'vertex: label'");
    }
    if (*vertex >= n) {
      throw LabelingError(LabelingErrorKind::VertexOutOfRange,
                          where + "vertex " + std::to_string(*vertex) + " >= n = " +
                              std::to_string(n));
    }
    if (labels[*vertex]) {
      throw LabelingError(LabelingErrorKind::DuplicateVertex,
                          where + "vertex " + std::to_string(*vertex) + " labeled twice");
    }
    labels[*vertex] = static_cast<Label>(*label);
  }

  std::vector<Label> values;
  values.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!labels[v]) {
      throw LabelingError(LabelingErrorKind::MissingLabel,
                          "vertex " + std::to_string(v) + " has no label");
    }
    values.push_back(*labels[v]);
  }
  return Labeling(std::move(values), sep);
}

Labeling read_labeling_file(const std::string& path, std::size_t n, Separation sep) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_labeling(buf.str(), n, sep);
}

std::string to_labeling_text(const Labeling& f) {
  std::ostringstream out;
  for (std::size_t v = 0; v < f.size(); ++v) out << v << ": " << f[static_cast<Vertex>(v)] << '\n';
  return out.str();
}

}  // namespace dilabel
