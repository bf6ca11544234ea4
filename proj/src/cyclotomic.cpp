#include "chardeg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chardeg::cyclo {

namespace {

// x^n - 1 divided by Phi_d for every proper divisor d.
std::vector<std::int64_t> compute_phi(unsigned n) {
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      std::int64_t c = num[i];
      quot[i - dd] = c;
      if (c)
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto phi = compute_phi(n);
  return cache.emplace(n, std::move(phi)).first->second;
}

Cyclo::Cyclo(unsigned n, std::int64_t c) : n_(n) {
  if (n == 0) throw std::invalid_argument("conductor must be >= 1");
  if (c) terms_.emplace_back(0u, c);
}

Cyclo Cyclo::root(unsigned n, std::int64_t k) {
  Cyclo z(n, 0);
  std::int64_t m = k % static_cast<std::int64_t>(n);
  if (m < 0) m += n;
  z.terms_.emplace_back(static_cast<unsigned>(m), 1);
  return z;
}

Cyclo Cyclo::from_dense(unsigned n, const std::vector<std::int64_t>& coeffs) {
  Cyclo z(n, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k]) z.terms_.emplace_back(static_cast<unsigned>(k % n), coeffs[k]);
  z.normalize();
  return z;
}

void Cyclo::normalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<std::pair<unsigned, std::int64_t>> out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

void Cyclo::check_same(const Cyclo& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic conductors differ");
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_same(o);
  Cyclo r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + o * -1; }

Cyclo Cyclo::operator*(std::int64_t c) const {
  Cyclo r = *this;
  for (auto& t : r.terms_) t.second *= c;
  r.normalize();
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_same(o);
  std::vector<std::int64_t> dense(n_, 0);
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) dense[(a + b) % n_] += x * y;
  return from_dense(n_, dense);
}

Cyclo Cyclo::conj() const {
  Cyclo r = *this;
  for (auto& t : r.terms_) t.first = (n_ - t.first) % n_;
  r.normalize();
  return r;
}

std::vector<std::int64_t> Cyclo::reduced() const {
  const auto& phi = cyclotomic_polynomial(n_);
  std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> v(std::max<std::size_t>(n_, deg), 0);
  for (const auto& [k, c] : terms_) v[k] += c;
  for (std::size_t i = v.size(); i-- > deg;) {
    std::int64_t c = v[i];
    if (!c) continue;
    for (std::size_t k = 0; k <= deg; ++k) v[i - deg + k] -= c * phi[k];
  }
  v.resize(deg);
  return v;
}

bool Cyclo::is_zero() const {
  if (terms_.empty()) return true;
  auto v = reduced();
  return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::int64_t> Cyclo::as_integer() const {
  auto v = reduced();
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k]) return std::nullopt;
  return v.empty() ? 0 : v[0];
}

std::string Cyclo::to_string() const {
  if (auto c = as_integer()) return std::to_string(*c);
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono = k == 0 ? "1" : "E(" + std::to_string(n_) + ")";
    if (k > 1) mono += "^" + std::to_string(k);
    std::int64_t a = c < 0 ? -c : c;
    std::string piece = a == 1 ? mono : std::to_string(a) + (k == 0 ? "" : "*" + mono);
    if (k == 0) piece = std::to_string(a);
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace chardeg::cyclo
