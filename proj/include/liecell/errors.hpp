#pragma once

#include <stdexcept>
#include <string>

namespace liecell {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input is not a point of the fundamental Weyl cell
struct not_in_cell : error {
  explicit not_in_cell(const std::string& constraint)
      : error("not in cell: " + constraint), violated(constraint) {}
  std::string violated;
};

struct zero_root : error {
  zero_root() : error("zero vector is not a root") {}
};

struct not_minimal_weight : error {
  explicit not_minimal_weight(const std::string& what) : error(what) {}
};

struct empty_input : error {
  explicit empty_input(const std::string& what) : error(what) {}
};

struct unclassifiable_diagram : error {
  explicit unclassifiable_diagram(const std::string& what) : error(what) {}
};

// generated kernel group disagrees with |H_u| + 1; unreachable unless a
// computation upstream is wrong
struct closure_mismatch : error {
  explicit closure_mismatch(const std::string& what) : error(what) {}
};

struct rank_deficient : error {
  explicit rank_deficient(const std::string& what) : error(what) {}
};

// the two kernel computations disagree
struct cross_check_failure : error {
  explicit cross_check_failure(const std::string& what) : error(what) {}
};

struct usage_error : error {
  explicit usage_error(const std::string& what) : error(what) {}
};

// construction-time invariant; active in all build types
inline void ensure(bool cond, const char* what) {
  if (!cond) throw error(std::string("internal invariant violated: ") + what);
}

}  // namespace liecell
