#pragma once

// Verification reports. Every structural checker returns one of these: a
// deterministic list of named identities, each with the formula it encodes,
// a verdict, and a witness (the basis tuple and both evaluated sides) when
// the identity fails.

#include <sstream>
#include <string>
#include <vector>

namespace wmb {

struct CheckEntry {
  std::string name;
  std::string anchor;  // the identity being checked, as a formula
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string subject;
  std::vector<CheckEntry> entries;

  void add(std::string name, std::string anchor, bool pass,
           std::string witness = "") {
    entries.push_back({std::move(name), std::move(anchor), pass, std::move(witness)});
  }

  void merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const CheckEntry* first_failure() const {
    for (const auto& e : entries)
      if (!e.pass) return &e;
    return nullptr;
  }

  std::string text() const {
    std::ostringstream os;
    if (!subject.empty()) os << "== " << subject << " ==\n";
    for (const auto& e : entries) {
      os << (e.pass ? "  [pass] " : "  [FAIL] ") << e.name;
      if (!e.anchor.empty()) os << "   {" << e.anchor << "}";
      os << "\n";
      if (!e.pass && !e.witness.empty()) os << "         witness: " << e.witness << "\n";
    }
    return os.str();
  }
};

}  // namespace wmb
