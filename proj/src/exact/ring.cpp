#include "braidalg/exact/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "braidalg/errors.hpp"

namespace braidalg::exact {

namespace {

int spectral_rank(std::string_view s) {
  if (s == "x") return 0;
  if (s == "y") return 1;
  if (s == "z") return 2;
  if (s == "v") return 3;
  return 4;
}

std::shared_ptr<const std::vector<std::string>> intern(std::vector<std::string> names) {
  static std::mutex mu;
  static std::map<std::vector<std::string>, std::shared_ptr<const std::vector<std::string>>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(names);
  if (it != table.end()) return it->second;
  auto ptr = std::make_shared<const std::vector<std::string>>(names);
  table.emplace(std::move(names), ptr);
  return ptr;
}

}  // namespace

bool variable_precedes(std::string_view a, std::string_view b) {
  const int ra = spectral_rank(a);
  const int rb = spectral_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

Ring::Ring() : names_(intern({})) {}

Ring Ring::of(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (n.empty()) throw UsageError("empty variable name");
  }
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return variable_precedes(a, b); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > kMaxVars) {
    throw UsageError("too many variables in one ring (limit " + std::to_string(kMaxVars) + ")");
  }
  return Ring(intern(std::move(names)));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::includes(const Ring& other) const {
  return std::all_of(other.names().begin(), other.names().end(),
                     [&](const std::string& n) { return contains(n); });
}

Ring Ring::with(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names();
  all.insert(all.end(), extra.begin(), extra.end());
  return of(std::move(all));
}

Ring Ring::join(const Ring& a, const Ring& b) { return a.with(b.names()); }

std::string Ring::to_string() const {
  std::string out = "Q[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += name(i);
  }
  return out + "]";
}

}  // namespace braidalg::exact
