#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace editar {

enum class ErrorKind {
  dimension,
  index,
  degenerate_input,
  contract,
  numeric,
  config,
  spec,
  template_fill,
  layout,
  insufficient_data,
  compatibility,
  io,
  input,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace editar
