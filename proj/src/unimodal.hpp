#pragma once

namespace memp::detail {

// Lowest argmin of a unimodal integer sequence on [lo, hi]. Each step keeps
// the left half when f(mid) <= f(mid + 1).
template <typename F>
int unimodal_argmin(int lo, int hi, F&& f) {
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (f(mid) <= f(mid + 1)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace memp::detail
