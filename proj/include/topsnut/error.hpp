#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace topsnut {

// All library failures carry a stable machine-readable code plus a human
// message; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace topsnut
