#pragma once

#include <sepsys/kernels.hh>

namespace sepsys::kernels::detail {

#if defined(SEPSYS_HAVE_AVX2)
const WordOps & avx2_ops();
#endif
#if defined(SEPSYS_HAVE_NEON)
const WordOps & neon_ops();
#endif

}
