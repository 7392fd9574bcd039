#include <cstdlib>
#include <stdexcept>
#include <string>

#include "circq/kernels.hpp"

namespace circq::kernels {

#if defined(CIRCQ_HAVE_AVX2)
const Table& avx2_table();
#endif

const Table* avx2() {
#if defined(CIRCQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Table* find(std::string_view name) {
  if (name == "scalar") return &scalar();
  if (name == "avx2") return avx2();
  return nullptr;
}

namespace {

const Table& select_active() {
  const char* env = std::getenv("CIRCQ_KERNELS");
  const std::string_view choice = env != nullptr ? env : "auto";
  if (choice.empty() || choice == "auto") {
    if (const Table* t = avx2()) return *t;
    return scalar();
  }
  if (const Table* t = find(choice)) return *t;
  throw std::runtime_error("CIRCQ_KERNELS: unavailable kernel set '" + std::string(choice) + "'");
}

} // namespace

const Table& active() {
  static const Table& table = select_active();
  return table;
}

} // namespace circq::kernels
