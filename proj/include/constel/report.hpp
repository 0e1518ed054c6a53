#ifndef CONSTEL_REPORT_HPP
#define CONSTEL_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace constel {

/// One verified counting identity: left and right side as exact integers.
struct LedgerLine {
  std::string identity_name;
  long long left_value = 0;
  long long right_value = 0;
  bool passed = false;
  std::string context;
};

inline LedgerLine make_line(std::string name, long long left, long long right,
                            std::string context) {
  return LedgerLine{std::move(name), left, right, left == right, std::move(context)};
}

struct LedgerReport {
  std::vector<LedgerLine> lines;

  bool all_passed() const {
    for (const auto& line : lines)
      if (!line.passed) return false;
    return true;
  }
};

/// "<identity_name>: <left> = <right> [PASS|FAIL] (<context>)"
inline std::string render(const LedgerLine& line) {
  std::ostringstream os;
  os << line.identity_name << ": " << line.left_value << " = " << line.right_value
     << (line.passed ? " [PASS]" : " [FAIL]") << " (" << line.context << ")";
  return os.str();
}

/// Machine-readable variant: the same fields, tab-separated.
inline std::string render_tsv(const LedgerLine& line) {
  std::ostringstream os;
  os << line.identity_name << '\t' << line.left_value << '\t' << line.right_value
     << '\t' << (line.passed ? "PASS" : "FAIL") << '\t' << line.context;
  return os.str();
}

} // namespace constel

#endif
