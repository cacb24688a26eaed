#pragma once

namespace isoseq {

/// Worker count for the parallel kernels. 0 restores the hardware default.
void set_jobs(int jobs);

/// Effective worker count (>= 1).
int effective_jobs();

}  // namespace isoseq
