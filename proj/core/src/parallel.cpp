#include "rotarr/parallel.hpp"

namespace rotarr {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_default_jobs(unsigned jobs) { g_jobs.store(jobs == 0 ? 1 : jobs); }

unsigned default_jobs() { return g_jobs.load(); }

}  // namespace rotarr
