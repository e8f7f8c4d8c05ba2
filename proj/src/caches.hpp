#pragma once

// Internal hooks used by clear_caches().

namespace permres::detail {

void clear_shape_cache();
void clear_hom_cache();
void clear_complex_cache();

}  // namespace permres::detail
