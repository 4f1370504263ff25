#pragma once

#include <stdexcept>
#include <string>

namespace muperm {

enum class Errc {
  parameter = 1,
  domain,
  not_wrappable,
  rewrite_invalid,
  not_expressible,
  invalid_factory_input,
  existence_violation,
  resource,
  parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace muperm
