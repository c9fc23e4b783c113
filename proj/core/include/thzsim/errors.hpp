#ifndef THZSIM_ERRORS_HPP
#define THZSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thzsim {

// Bad configuration input: unparseable data file, schema violation, empty catalog.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine failed to converge; message carries the achieved error estimate.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation would exceed a configured resource ceiling (series length, iterations).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline void require(bool cond, const char* what) {
  if (!cond) throw std::domain_error(what);
}
inline void require_arg(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}
}  // namespace detail

}  // namespace thzsim

#endif
