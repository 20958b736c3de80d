#include "ssz/parallel.hpp"

namespace ssz {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_default_jobs(unsigned jobs) { g_jobs.store(jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs); }

unsigned default_jobs() { return g_jobs.load(); }

} // namespace ssz
