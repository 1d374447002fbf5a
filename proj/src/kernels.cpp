#include "fwlab/kernels.hpp"

#include <cstdlib>

namespace fwlab::kernels {

namespace {

const KernelTable *lookup(const std::string &name) {
  if (name == "scalar") return &scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && cpu_has_avx2()) return &avx2_table;
#endif
#if defined(__aarch64__)
  if (name == "neon") return &neon_table;
#endif
  return nullptr;
}

const KernelTable *pick_default() {
  if (const char *env = std::getenv("FWLAB_KERNEL")) {
    if (const KernelTable *t = lookup(env)) return t;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return &avx2_table;
#endif
#if defined(__aarch64__)
  return &neon_table;
#endif
  return &scalar_table;
}

const KernelTable *&active_slot() {
  static const KernelTable *slot = pick_default();
  return slot;
}

}  // namespace

const KernelTable &active() { return *active_slot(); }

bool select(const std::string &name) {
  const KernelTable *t = lookup(name);
  if (!t) return false;
  active_slot() = t;
  return true;
}

}  // namespace fwlab::kernels
