#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

/// A form failed the dimension profile expected of a general form.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(std::string check, const std::string& what)
      : std::runtime_error(what), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// A random sample landed in special position; the caller should draw again.
class SampleRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apolar
