#include "viscoex/fluid.hpp"

namespace viscoex {

template class BasicFluidParams<double>;

}  // namespace viscoex
