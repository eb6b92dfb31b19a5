#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace gs {

// Error taxonomy. The runner maps these onto the process exit contract:
// input 1, resource 2, invariant 3, internal bug 4.
enum class Errc {
  non_square,
  bad_character,
  not_permutation,
  shared_cell,
  multi_component,
  index_too_small,
  io,
  bad_config,
  cap_exceeded,
  empty_interval,
  not_positive,
  not_a_complex,
  not_pure,
  invariant_failure,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

  int exit_code() const {
    switch (code_) {
      case Errc::non_square:
      case Errc::bad_character:
      case Errc::not_permutation:
      case Errc::shared_cell:
      case Errc::multi_component:
      case Errc::index_too_small:
      case Errc::io:
      case Errc::bad_config:
        return 1;
      case Errc::cap_exceeded:
        return 2;
      case Errc::empty_interval:
      case Errc::not_positive:
      case Errc::not_a_complex:
      case Errc::not_pure:
      case Errc::invariant_failure:
        return 3;
      case Errc::internal:
        return 4;
    }
    return 4;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// FNV-1a, used to fingerprint grid files in reports.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Positive residue, for torus arithmetic with possibly negative arguments.
inline int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

// Runs fn(i) for i in [0, count). With threads <= 1 runs inline; otherwise a
// small pool pulls indices from a shared counter. Callers make runs
// schedule-independent by writing results into slot i only.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  int nthreads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gs
