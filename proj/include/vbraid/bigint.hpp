#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vbraid {

// Exact integers everywhere: SNF/Hermite pivots and Magnus coefficients
// overflow machine words even on small inputs.
using Int = boost::multiprecision::cpp_int;

}  // namespace vbraid
