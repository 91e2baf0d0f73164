#include "slnaw/core/parallel.hpp"

#include <atomic>

namespace slnaw {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

}  // namespace slnaw
