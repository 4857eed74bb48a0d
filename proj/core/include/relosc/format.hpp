#pragma once

#include <string>

#include "relosc/log_complex.hpp"

namespace relosc {

// %.17e -- round-trips any double exactly, so repeated runs are byte-identical.
std::string fmt_sci(double v);

// "re+imi" / "re-imi", both parts %.17e.
std::string fmt_complex(Complex v);

}  // namespace relosc
