#pragma once

#include <stdexcept>
#include <string>

namespace coda {

// Base for every error the library reports. name() is the stable identifier
// printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define CODA_DEFINE_ERROR(Type)                                           \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  }

CODA_DEFINE_ERROR(CapExceeded);
CODA_DEFINE_ERROR(CarrierOverflow);
CODA_DEFINE_ERROR(TooManyEndos);
CODA_DEFINE_ERROR(NotAHomomorphism);
CODA_DEFINE_ERROR(UnknownBuiltin);

#undef CODA_DEFINE_ERROR

}  // namespace coda
