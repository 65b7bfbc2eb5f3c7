#include "entorder/cli/format.hpp"

#include <charconv>

namespace entorder::cli {

namespace {

int significant_digits(const std::string& s) {
  int count = 0;
  bool seen_nonzero = false;
  for (char ch : s) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (!seen_nonzero) {
      if (ch == '0') continue;
      seen_nonzero = true;
    }
    ++count;
  }
  return count;
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, res.ptr);
  if (significant_digits(s) > 9) {
    res = std::to_chars(buf, buf + sizeof(buf), value,
                        std::chars_format::general, 9);
    s.assign(buf, res.ptr);
  }
  return s;
}

}  // namespace entorder::cli
