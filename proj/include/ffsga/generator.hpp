#pragma once

#include "ffsga/instance.hpp"

namespace ffsga {

// Builds a random instance from a seeded SplitMix64 stream. Draw order is
// fixed: processing times U[1,5] job-major (stage, then machine inside),
// then releases U[0, total mean load] per job, then one slack factor
// U[0,2] per job with due = release + job mean load * (1 + slack).
Instance generate(const GenParams& params);

}  // namespace ffsga
