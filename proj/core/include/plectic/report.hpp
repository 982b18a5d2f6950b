#pragma once

#include <string>
#include <vector>

namespace plectic {

struct Verdict {
  std::string name;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct CheckReport {
  std::string title;
  std::vector<Verdict> items;

  bool ok() const {
    for (const auto& v : items)
      if (!v.ok) return false;
    return true;
  }
  const Verdict* first_failure() const {
    for (const auto& v : items)
      if (!v.ok) return &v;
    return nullptr;
  }
  const Verdict* find(const std::string& name) const {
    for (const auto& v : items)
      if (v.name == name) return &v;
    return nullptr;
  }
  void pass(std::string name) { items.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) { items.push_back({std::move(name), false, std::move(witness)}); }
  void add(std::string name, bool ok, std::string witness = {}) {
    items.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
  }
  void merge(const CheckReport& other) {
    for (const auto& v : other.items) items.push_back(v);
  }
};

std::string format_tuple(const std::vector<std::string>& names, const std::vector<int>& idx);

}  // namespace plectic
