#pragma once

#include <string>
#include <vector>

namespace sturmkit {

/// One checked condition: a label ("Def 1.3(iv)"), verdict, optional detail.
struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

/// Itemized validation result. Validators append one line per condition,
/// mirroring the itemized definitions they implement.
struct Report {
  std::vector<CheckLine> lines;

  void add(std::string label, bool pass, std::string detail = {}) {
    lines.push_back({std::move(label), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  bool passed(const std::string& label) const {
    for (const auto& l : lines)
      if (l.label == label) return l.pass;
    return false;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& l : lines) {
      out += l.label;
      out += l.pass ? ": PASS" : ": FAIL";
      if (!l.detail.empty()) {
        out += " (";
        out += l.detail;
        out += ")";
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace sturmkit
