#pragma once

// Helpers shared by the organic demos.

#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>

#include "coda/organic.hpp"

namespace coda::organic_detail {

Data pow(std::string_view atom, std::size_t n);  // atom repeated n times
Data spaced(std::initializer_list<Data> parts);  // concatenation
Coda quoted(const Data& d);                      // (:d)
Data compose_all(const std::vector<Data>& stages);  // prod (:s1) (:s2) ...
Data act(const Data& f, const Data& x, const Context& ctx, Budget budget = {});
std::size_t count_word(const Data& d, std::string_view w);

// Counts agreements over a property sweep and keeps the first failure.
struct Tally {
  std::size_t total = 0;
  std::size_t ok = 0;
  std::string first_failure;

  void record(bool pass, const std::function<std::string()>& detail);
  void report(DemoReport& r, std::string description) const;
};

}  // namespace coda::organic_detail
