#include "heun/dynamics/portrait.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "heun/dynamics/josephson.hpp"

namespace heun::dynamics {

double Portrait::B(int ix) const { return spec.b_min + (spec.b_max - spec.b_min) * ix / (spec.nx - 1); }
double Portrait::A(int iy) const { return spec.a_min + (spec.a_max - spec.a_min) * iy / (spec.ny - 1); }

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HEUN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Portrait portrait_scan(const PortraitSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw std::invalid_argument("portrait_scan: nx and ny must be >= 2");
  if (!(spec.tol > 0.0)) throw std::invalid_argument("portrait_scan: tol must be positive");
  if (!(spec.omega > 0.0)) throw std::invalid_argument("portrait_scan: omega must be > 0");
  Portrait out;
  out.spec = spec;
  const std::size_t n = static_cast<std::size_t>(spec.nx) * spec.ny;
  out.rho.assign(n, 0.0);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      const int ix = static_cast<int>(k % spec.nx), iy = static_cast<int>(k / spec.nx);
      out.rho[k] = rotation_number(JosephsonParams{out.B(ix), out.A(iy), spec.omega}, spec.tol).rho;
    }
  };
  const int nt = std::min<std::size_t>(resolve_threads(spec.threads), n);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

double fractional_fraction(const Portrait& p, double lo, double hi) {
  std::size_t count = 0;
  for (double r : p.rho) {
    const double f = std::abs(r - std::round(r));
    if (f > lo && f < hi) ++count;
  }
  return p.rho.empty() ? 0.0 : double(count) / p.rho.size();
}

std::string portrait_csv(const Portrait& p) {
  std::string s = "B,A,rho\n";
  char buf[96];
  for (int iy = 0; iy < p.spec.ny; ++iy)
    for (int ix = 0; ix < p.spec.nx; ++ix) {
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10f\n", p.B(ix), p.A(iy), p.at(ix, iy));
      s += buf;
    }
  return s;
}

}  // namespace heun::dynamics
