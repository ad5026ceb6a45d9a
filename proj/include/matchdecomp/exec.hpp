#ifndef MATCHDECOMP_EXEC_HPP
#define MATCHDECOMP_EXEC_HPP

namespace matchdecomp {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// must produce identical results; the serial one is what tests compare to.
enum class ExecPolicy { Serial, Parallel };

/// Number of threads an OpenMP region would use (1 when built without it).
int max_threads();

/// Caps the OpenMP thread count for subsequent parallel regions.
void set_max_threads(int threads);

}  // namespace matchdecomp

#endif
