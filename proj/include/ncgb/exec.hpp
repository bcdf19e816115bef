#pragma once

namespace ncgb {

/// Selects between an OpenMP kernel and its serial reference.
enum class Exec { serial, parallel };

/// Caps the OpenMP worker count; values < 1 leave the runtime default.
void set_jobs(int jobs);
int max_jobs();

}  // namespace ncgb
