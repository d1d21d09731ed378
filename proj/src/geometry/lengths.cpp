#include <string>

#include "common.hpp"

namespace steklov {

using detail::Terms;

SortedLengths recover_sorted_lengths(const CharPoly& F, const GeometryOpts& opts) {
  const Terms t = Terms::from(F, opts);
  const std::size_t count = t.freqs.size();
  if ((count & (count - 1)) != 0)
    fail(ErrorCode::NotPowerOfTwo, std::to_string(count) + " frequencies is not a power of two");
  std::size_t n = 1;
  while ((std::size_t{1} << (n - 1)) < count) ++n;

  SortedLengths SL;
  const double L = t.L();
  SL.total = L;
  if (n == 1) {
    SL.values = {L};
    return SL;
  }
  SL.values.push_back((L - t.freqs[count - 2]) / 2.0);

  std::vector<bool> excluded(count, false);
  excluded[count - 1] = true;  // f = 0 gives L itself
  for (std::size_t k = 2; k <= n - 1; ++k) {
    // Newly reachable exclusion values: subsets that contain l'_{k-1}.
    const std::size_t prev = k - 2;
    const std::size_t subsets = std::size_t{1} << prev;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      double sum = SL.values[prev];
      for (std::size_t j = 0; j < prev; ++j)
        if (mask & (std::size_t{1} << j)) sum += SL.values[j];
      const double v = std::abs(L - 2.0 * sum);
      std::size_t hits = 0;
      const std::size_t idx = t.find(v, &hits);
      if (hits > 1)
        fail(ErrorCode::AmbiguousExclusion, "exclusion value " + std::to_string(v) + " matches several frequencies");
      if (idx == detail::kNone) continue;
      if (excluded[idx])
        fail(ErrorCode::AmbiguousExclusion, "frequency " + std::to_string(t.freqs[idx]) + " excluded twice");
      excluded[idx] = true;
    }
    std::size_t top = detail::kNone;
    for (std::size_t i = count; i-- > 0;)
      if (!excluded[i]) {
        top = i;
        break;
      }
    if (top == detail::kNone) fail(ErrorCode::AmbiguousExclusion, "no frequency left after exclusion");
    const double lk = (L - t.freqs[top]) / 2.0;
    if (lk < SL.values.back() - t.tol)
      fail(ErrorCode::AmbiguousExclusion, "recovered lengths are not increasing");
    SL.values.push_back(lk);
  }
  double rest = L;
  for (double v : SL.values) rest -= v;
  SL.values.push_back(rest);
  for (double v : SL.values)
    if (!(v > 0.0)) fail(ErrorCode::NonPositiveLength, "recovered length " + std::to_string(v) + " <= 0");
  return SL;
}

}  // namespace steklov
