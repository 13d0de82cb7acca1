#pragma once

namespace hiero {

// Sweep kernels come in two flavors. Serial is the plain reference
// implementation; Parallel partitions the same sweep across OpenMP threads
// and merges with a deterministic reduction, so both return identical
// results. Tests compare the two, tools/bench_sweeps times them.
enum class Exec { Serial, Parallel };

}  // namespace hiero
