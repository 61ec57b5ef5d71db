#include "fsusy/verification.hpp"

#include <algorithm>
#include <cmath>

namespace fsusy {

Record make_record(std::string name, std::string identity, Real residual, double tolerance, Subspace subspace,
                   Bound bound) {
  Record r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.residual = static_cast<double>(residual);
  r.tolerance = tolerance;
  r.subspace = subspace;
  r.bound = bound;
  if (std::isnan(r.residual)) {
    r.pass = false;
  } else {
    r.pass = bound == Bound::Below ? residual < tolerance : residual > tolerance;
  }
  return r;
}

bool all_pass(const Fragment& records) {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

void extend(Fragment& into, const Fragment& more) { into.insert(into.end(), more.begin(), more.end()); }

const char* to_string(Subspace s) { return s == Subspace::Interior ? "interior" : "full"; }

const char* to_string(Bound b) { return b == Bound::Below ? "below" : "above"; }

}  // namespace fsusy
