#include <fockpt/instantiations.hpp>

namespace fockpt
{
FOCKPT_INSTANTIATE(, double)
FOCKPT_INSTANTIATE(, wide)
} // namespace fockpt
