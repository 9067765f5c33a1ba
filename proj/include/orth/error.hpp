#pragma once

#include <stdexcept>
#include <string>

namespace orth {

// Every failure carries a short category string that stays stable across
// versions; the CLI prints it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

[[noreturn]] inline void fail(const std::string& category, const std::string& what) {
  throw Error(category, what);
}

}  // namespace orth
