#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidalg::exact {

/// Upper bound on the number of variables of a polynomial ring.
inline constexpr std::size_t kMaxVars = 16;

/// Global variable precedence: spectral variables x < y < z < v first, then
/// every other symbol alphabetically. Rings always list their variables in
/// this order, so embedding a polynomial into a larger ring never reorders
/// its monomials.
bool variable_precedes(std::string_view a, std::string_view b);

/// An ordered, interned list of variable names. Two rings compare equal iff
/// they carry the same names; equality is a pointer comparison.
class Ring {
 public:
  /// The ring with no variables (coefficients in Q).
  Ring();

  /// Sorts by global precedence and removes duplicates.
  static Ring of(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  bool includes(const Ring& other) const;

  Ring with(const std::vector<std::string>& extra) const;
  static Ring join(const Ring& a, const Ring& b);

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

  std::string to_string() const;

 private:
  explicit Ring(std::shared_ptr<const std::vector<std::string>> names)
      : names_(std::move(names)) {}
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace braidalg::exact
