#include <atomic>
#include <cstdlib>
#include <string>

#include "steklov/kernels.hpp"

namespace steklov::kernels {
namespace {

// -1 automatic, otherwise static_cast<int>(Isa).
std::atomic<int> g_forced{-1};

Isa detect() {
  if (const char* env = std::getenv("STEKLOV_KERNELS")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

Isa active_isa() {
  int forced = g_forced.load();
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void force_isa(std::optional<Isa> isa) { g_forced.store(isa ? static_cast<int>(*isa) : -1); }

void trig_sum_grid(const TrigSumArgs& a, Isa isa) {
  if (isa == Isa::Avx2 && cpu_has_avx2()) return avx2::trig_sum_grid(a);
  scalar::trig_sum_grid(a);
}

void log_product(const LogProductArgs& a, Isa isa) {
  if (isa == Isa::Avx2 && cpu_has_avx2()) return avx2::log_product(a);
  scalar::log_product(a);
}

void exp_transform(const ExpTransformArgs& a, Isa isa) {
  if (isa == Isa::Avx2 && cpu_has_avx2()) return avx2::exp_transform(a);
  scalar::exp_transform(a);
}

}  // namespace steklov::kernels
