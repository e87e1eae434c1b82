#pragma once

#include <stdexcept>
#include <string>

namespace quiverstrat {

// Failure taxonomy shared by the library and the command-line driver.  The
// numeric values double as process exit codes.
enum class errc : int {
  ok = 0,
  parse = 2,         // malformed input or an inadmissible presentation
  budget = 3,        // a configured cap or search budget was exhausted
  precondition = 4,  // an operation was invoked outside its stated domain
  alarm = 10,        // two routes that must agree produced different answers
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string what)
      : std::runtime_error(std::move(what)), code_(code) {}

  errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

// Internal consistency failures (violated math invariants, as opposed to bad
// user input) surface as logic_error so they are never confused with the
// errc taxonomy above.
inline void internal_check(bool ok, const char* what) {
  if (!ok) {
    throw std::logic_error(std::string("internal invariant violated: ") + what);
  }
}

}  // namespace quiverstrat
