#ifndef DILABEL_LABELING_HPP
#define DILABEL_LABELING_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dilabel/digraph.hpp"

namespace dilabel {

using Label = std::uint32_t;

enum class LabelingErrorKind {
  InvalidSeparation,
  MissingLabel,
  Syntax,
  DuplicateVertex,
  VertexOutOfRange,
};

class LabelingError : public std::runtime_error {
 public:
  LabelingError(LabelingErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  LabelingErrorKind kind() const noexcept { return kind_; }

 private:
  LabelingErrorKind kind_;
};

/// Separation parameters of an L(j,k)-labeling; always j >= k >= 1.
class Separation {
 public:
  /// Throws LabelingError(InvalidSeparation) unless j >= k >= 1.
  Separation(unsigned j, unsigned k);

  unsigned j() const noexcept { return j_; }
  unsigned k() const noexcept { return k_; }

  friend bool operator==(const Separation&, const Separation&) = default;

 private:
  unsigned j_;
  unsigned k_;
};

/// Vertex -> label map together with the separation it is meant to satisfy.
/// The span is derived from the values on demand.
class Labeling {
 public:
  Labeling(std::vector<Label> values, Separation sep)
      : values_(std::move(values)), sep_(sep) {}

  std::span<const Label> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Label operator[](Vertex v) const { return values_[v]; }

  Separation separation() const noexcept { return sep_; }
  unsigned j() const noexcept { return sep_.j(); }
  unsigned k() const noexcept { return sep_.k(); }

  Label min_label() const;
  Label max_label() const;
  /// max - min; 0 for an empty labeling.
  Label span() const { return values_.empty() ? 0 : max_label() - min_label(); }

  /// Same values checked against a different separation.
  Labeling with_separation(Separation sep) const { return Labeling(values_, sep); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> values_;
  Separation sep_;
};

/// A pair that breaks the separation condition at its directed distance.
struct Violation {
  Vertex x = 0;
  Vertex y = 0;
  unsigned distance = 0;  ///< d(x,y): 1 or 2
  Label required = 0;     ///< j or k
  Label actual = 0;       ///< |f(x) - f(y)|

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every ordered pair at distance 1 closer than j and at distance 2 closer
/// than k, in (distance, x, y) order. Empty iff `f` is an L(j,k)-labeling.
/// Throws LabelingError(MissingLabel) if `f` does not cover every vertex.
std::vector<Violation> verify(const Digraph& d, const Labeling& f);

inline bool is_valid(const Digraph& d, const Labeling& f) { return verify(d, f).empty(); }

/// Shifts labels so the minimum is 0.
Labeling normalize(const Labeling& f);

/// Parses `v: label` lines (any order, `#` comments) for a digraph on n
/// vertices. Every vertex must appear exactly once.
Labeling parse_labeling(std::string_view text, std::size_t n, Separation sep);

Labeling read_labeling_file(const std::string& path, std::size_t n, Separation sep);

/// One `v: label` line per vertex in id order.
std::string to_labeling_text(const Labeling& f);

}  // namespace dilabel

#endif  // DILABEL_LABELING_HPP
