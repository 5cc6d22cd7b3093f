#include "liftreg/enumerate.hpp"

#include <atomic>

namespace liftreg {

namespace {
constexpr std::uint64_t kDefaultCap = 10'000'000;
std::atomic<std::uint64_t> g_cap{kDefaultCap};
}  // namespace

std::uint64_t enum_cap() { return g_cap.load(); }

void set_enum_cap(std::uint64_t cap) { g_cap.store(cap == 0 ? kDefaultCap : cap); }

std::vector<IntVec> enumerate_lattice_points(const std::vector<LinearIneq>& ineqs,
                                             const IntBox& box) {
  std::size_t n = box.lo.size();
  if (box.hi.size() != n) fail(ErrorCode::kInternal, "box bounds dimension mismatch");
  for (const auto& iq : ineqs)
    if (iq.coeff.size() != n)
      fail(ErrorCode::kInternal, "inequality dimension mismatch");

  Int count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box.hi[i] < box.lo[i]) return {};
    count *= box.hi[i] - box.lo[i] + 1;
  }
  if (count > Int(static_cast<unsigned long>(enum_cap())))
    fail(ErrorCode::kBoxTooLarge,
         "candidate box holds " + count.get_str() + " points (cap " +
             std::to_string(enum_cap()) + ")");

  std::vector<IntVec> out;
  IntVec p = box.lo;
  while (true) {
    bool ok = true;
    for (const auto& iq : ineqs) {
      if (Rat(dot(iq.coeff, p)) > iq.rhs) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
    // odometer advance, most significant axis first => lexicographic order
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (p[axis] < box.hi[axis]) {
        ++p[axis];
        for (std::size_t j = axis + 1; j < n; ++j) p[j] = box.lo[j];
        break;
      }
      if (axis == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace liftreg
