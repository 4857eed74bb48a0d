#include "relosc/format.hpp"

#include <cmath>
#include <cstdio>

namespace relosc {

std::string fmt_sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

std::string fmt_complex(Complex v) {
  if (std::signbit(v.imag())) return fmt_sci(v.real()) + "-" + fmt_sci(-v.imag()) + "i";
  return fmt_sci(v.real()) + "+" + fmt_sci(v.imag()) + "i";
}

}  // namespace relosc
