#include <omp.h>

#include "zetakit/numeric.hpp"

namespace zetakit {

int default_thread_count() { return omp_get_max_threads(); }

}  // namespace zetakit
