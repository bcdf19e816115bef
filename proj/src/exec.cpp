#include "ncgb/exec.hpp"

#include <omp.h>

namespace ncgb {

void set_jobs(int jobs) {
  if (jobs >= 1) omp_set_num_threads(jobs);
}

int max_jobs() { return omp_get_max_threads(); }

}  // namespace ncgb
