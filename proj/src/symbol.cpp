#include "unialg/symbol.hpp"

#include <charconv>
#include <deque>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace unialg {
namespace {

class NameTable {
 public:
  explicit NameTable(std::initializer_list<std::string_view> seed) {
    for (auto name : seed) intern(name);
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  const std::string& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    if (id >= names_.size()) throw std::out_of_range("unknown symbol id " + std::to_string(id));
    return names_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;  // deque: references survive growth
  std::unordered_map<std::string, std::uint32_t> ids_;
};

NameTable& constants() {
  static NameTable table{"star", "l", "r"};
  return table;
}

NameTable& variables() {
  static NameTable table{};
  return table;
}

std::optional<std::uint32_t> canonical_suffix(std::string_view name) {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  auto digits = name.substr(1);
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (value >= vars::kFreshBase - vars::kCanonicalBase) return std::nullopt;
  return value;
}

}  // namespace

SymbolId intern_constant(std::string_view name) { return constants().intern(name); }

VarId intern_variable(std::string_view name) {
  if (auto index = canonical_suffix(name)) return vars::canonical(*index);
  auto id = variables().intern(name);
  if (id >= vars::kCanonicalBase) throw std::length_error("variable table exhausted");
  return id;
}

const std::string& constant_name(SymbolId id) { return constants().name(id); }

std::string variable_name(VarId id) {
  if (vars::is_fresh(id)) return "_" + std::to_string(id - vars::kFreshBase);
  if (vars::is_canonical(id)) return "v" + std::to_string(vars::canonical_index(id));
  return variables().name(id);
}

bool is_reserved_constant(SymbolId id) {
  return id == reserved::kStar || id == reserved::kLeft || id == reserved::kRight;
}

}  // namespace unialg
