// cocycle-kam: shared basics (logging, errors, numeric helpers).
#ifndef CKAM_COMMON_HPP
#define CKAM_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace ckam {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error classes map onto the CLI exit codes: gate=2, audit=3, numeric=4.
struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AuditError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LogLevel : int { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("COCYCLE_KAM_LOG");
    if (!env) return LogLevel::Error;
    std::string s(env);
    if (s == "debug") return LogLevel::Debug;
    if (s == "info") return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

template <class... Args>
inline void log_at(LogLevel lvl, const char* fmt, Args... args) {
  if (static_cast<int>(lvl) > static_cast<int>(log_level())) return;
  const char* tag = lvl == LogLevel::Error ? "error" : (lvl == LogLevel::Info ? "info" : "debug");
  std::fprintf(stderr, "[ckam %s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fprintf(stderr, "\n");
}

#define CKAM_INFO(...) ::ckam::log_at(::ckam::LogLevel::Info, __VA_ARGS__)
#define CKAM_DEBUG(...) ::ckam::log_at(::ckam::LogLevel::Debug, __VA_ARGS__)
#define CKAM_ERROR(...) ::ckam::log_at(::ckam::LogLevel::Error, __VA_ARGS__)

// Distance on T = R/2piZ: inf_j |x - 2pi j|, in [0, pi].
inline double torus_distance(double x) {
  if (!std::isfinite(x)) throw NumericError("torus_distance: non-finite input");
  double y = std::fmod(x, kTwoPi);
  if (y < 0) y += kTwoPi;
  return std::min(y, kTwoPi - y);
}

inline double sqr(double x) { return x * x; }

// Deterministic splitmix64; used wherever tests need reproducible samples.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0,1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

}  // namespace ckam

#endif  // CKAM_COMMON_HPP
