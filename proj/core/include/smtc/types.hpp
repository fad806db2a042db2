#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace smtc {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kSnapTolerance = 1e-6;

// Input that does not conform to the documented JSON layout.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Data that parses but is structurally inconsistent (bad shapes, labels out of
// range, non-associative fusion, missing unit, ...).
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void cat_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void cat_into(std::ostringstream& os, T&& v, Rest&&... rest) {
  os << std::forward<T>(v);
  cat_into(os, std::forward<Rest>(rest)...);
}
}  // namespace detail

// String concatenation helper used for error/violation messages.
template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  os.precision(12);
  detail::cat_into(os, std::forward<Args>(args)...);
  return os.str();
}

// Collects violation messages from a check. Only the first kMaxRecorded
// messages are stored verbatim; the total count keeps increasing.
class Report {
 public:
  static constexpr std::size_t kMaxRecorded = 100;

  void add(std::string message) {
    ++total_;
    if (messages_.size() < kMaxRecorded) messages_.push_back(std::move(message));
  }
  void merge(const Report& other) {
    total_ += other.total_;
    for (const auto& m : other.messages_) {
      if (messages_.size() >= kMaxRecorded) break;
      messages_.push_back(m);
    }
  }
  bool ok() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& messages() const { return messages_; }

  std::string summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << total_ << " violation(s)";
    if (total_ > messages_.size()) os << " (first " << messages_.size() << " shown)";
    for (const auto& m : messages_) os << "\n  " << m;
    return os.str();
  }

 private:
  std::vector<std::string> messages_;
  std::size_t total_ = 0;
};

// Exact rational arithmetic for charges and central charges.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }
  explicit Rational(long long n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw ShapeError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
  Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  // Representative of the class mod m with 0 <= r < m.
  Rational mod(long long m) const {
    long long n = num % (m * den);
    if (n < 0) n += m * den;
    return Rational(n, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p", "-p", "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw SchemaError(cat("cannot parse rational '", text, "'"));
    }
  }

  // Nearest rational p/q with q <= max_den, provided it is within tol.
  // Returns false when no grid point is close enough.
  static bool snap(double x, long long max_den, double tol, Rational& out) {
    long long best_num = 0, best_den = 1;
    double best_err = 1e300;
    for (long long q = 1; q <= max_den; ++q) {
      long long p = static_cast<long long>(std::llround(x * static_cast<double>(q)));
      double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
      if (err < best_err - 1e-18) {
        best_err = err;
        best_num = p;
        best_den = q;
      }
    }
    if (best_err > tol) return false;
    out = Rational(best_num, best_den);
    return true;
  }
};

}  // namespace smtc
