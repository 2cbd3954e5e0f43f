#ifndef DILABEL_ERRORS_HPP
#define DILABEL_ERRORS_HPP

#include <stdexcept>

namespace dilabel {

/// An operation was called on an input outside its domain (e.g. a labeler
/// applied to the wrong digraph class).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dilabel

#endif  // DILABEL_ERRORS_HPP
