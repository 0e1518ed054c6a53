#ifndef CONSTEL_LEDGER_HPP
#define CONSTEL_LEDGER_HPP

#include <string>

#include "constel/constellation.hpp"
#include "constel/errors.hpp"
#include "constel/report.hpp"

namespace constel {

namespace detail {
inline std::string cover_context(const Constellation& c) {
  return "degree " + std::to_string(c.degree) + ", " + std::to_string(c.tuple.size()) +
         " entries";
}
} // namespace detail

/// Riemann-Hurwitz for a closed surface covering the sphere:
/// chi + b = 2d, branching counted with multiplicity.
inline LedgerLine leaf_euler_check(const Constellation& c) {
  if (!validate(c).valid()) throw Error("euler check needs a valid constellation");
  long long left = euler_characteristic(c) + branching_total(c);
  long long right = 2LL * c.degree;
  return make_line("euler[chi + b = 2d]", left, right, detail::cover_context(c));
}

/// Constants of the triangulation Belyi pipeline: a cover built from a
/// triangulation with v vertices on a leaf of Euler characteristic chi has
/// b = 12v - 13*chi, with companion degree identity 2d = 12v - 12*chi.
inline LedgerReport belyi_constants_check(const Constellation& c, int v, int chi) {
  if (!validate(c).valid()) throw Error("belyi check needs a valid constellation");
  if (v < 1) throw Error("belyi check needs at least one vertex");
  std::string ctx = detail::cover_context(c) + ", v=" + std::to_string(v) +
                    ", chi=" + std::to_string(chi);
  LedgerReport rep;
  rep.lines.push_back(make_line("belyi[b = 12v - 13chi]", branching_total(c),
                                12LL * v - 13LL * chi, ctx));
  rep.lines.push_back(
      make_line("belyi[2d = 12v - 12chi]", 2LL * c.degree, 12LL * v - 12LL * chi, ctx));
  return rep;
}

/// Constants of the quadrangulation pipeline with vertices on two parallel
/// transversal copies (v = 2y): 2d = 8y - 4*chi and b = 8y - 5*chi.
inline LedgerReport quad_constants_check(const Constellation& c, int y, int chi) {
  if (!validate(c).valid()) throw Error("quad check needs a valid constellation");
  if (y < 1) throw Error("quad check needs a nonempty transversal");
  std::string ctx = detail::cover_context(c) + ", y=" + std::to_string(y) +
                    ", chi=" + std::to_string(chi);
  LedgerReport rep;
  rep.lines.push_back(
      make_line("quad[2d = 8y - 4chi]", 2LL * c.degree, 8LL * y - 4LL * chi, ctx));
  rep.lines.push_back(
      make_line("quad[b = 8y - 5chi]", branching_total(c), 8LL * y - 5LL * chi, ctx));
  return rep;
}

/// Constants of the merged-hexagon pipeline (v = 2y): 2d = 6y - 3*chi and,
/// combining with the euler identity, the derived branch form b = 6y - 4*chi.
inline LedgerReport hex_constants_check(const Constellation& c, int y, int chi) {
  if (!validate(c).valid()) throw Error("hex check needs a valid constellation");
  if (y < 1) throw Error("hex check needs a nonempty transversal");
  std::string ctx = detail::cover_context(c) + ", y=" + std::to_string(y) +
                    ", chi=" + std::to_string(chi);
  LedgerReport rep;
  rep.lines.push_back(
      make_line("hex[2d = 6y - 3chi]", 2LL * c.degree, 6LL * y - 3LL * chi, ctx));
  rep.lines.push_back(make_line("hex[b = 6y - 4chi, derived]", branching_total(c),
                                6LL * y - 4LL * chi, ctx));
  return rep;
}

} // namespace constel

#endif
