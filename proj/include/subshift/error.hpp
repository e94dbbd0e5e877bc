#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

enum class Errc {
  unsupported_alphabet,
  invalid_argument,
  needs_more_blocks,
  invalid_seed,
  insufficient_window,
  insufficient_occurrences,
  unknown_word,
  insufficient_language,
  depth_exceeded,
  not_uniquely_certified,
  bad_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace subshift
