#include <atomic>
#include <cstdlib>
#include <string>

#include "centra/errors.hpp"
#include "centra/kernels.hpp"

namespace centra::kernels {

#if defined(CENTRA_HAVE_AVX2)
const KernelSet& avx2_set();
#endif

const KernelSet* avx2() {
#if defined(CENTRA_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&scalar()};
  if (const KernelSet* k = avx2()) out.push_back(k);
  return out;
}

namespace {

const KernelSet* resolve(std::string_view name) {
  if (name == "scalar") return &scalar();
  if (name == "avx2") return avx2();
  if (name.empty() || name == "auto") {
    const KernelSet* k = avx2();
    return k ? k : &scalar();
  }
  return nullptr;
}

const KernelSet* initial() {
  const char* env = std::getenv("CENTRA_SIMD");
  const KernelSet* k = resolve(env ? std::string_view(env) : std::string_view());
  return k ? k : resolve("auto");
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> k{initial()};
  return k;
}

}  // namespace

const KernelSet& active() { return *current().load(std::memory_order_relaxed); }

void select(std::string_view name) {
  const KernelSet* k = resolve(name);
  if (k == nullptr) throw OutOfRange("kernel set '" + std::string(name) + "' is not available");
  current().store(k, std::memory_order_relaxed);
}

}  // namespace centra::kernels
