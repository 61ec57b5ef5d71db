#pragma once

#include <string>
#include <vector>

#include "fsusy/linalg.hpp"

namespace fsusy {

enum class Subspace { Interior, Full };

/// How a residual is compared with its threshold.
enum class Bound {
  Below,  ///< pass iff residual < tolerance (identity holds)
  Above,  ///< pass iff residual > tolerance (quantity must not vanish)
};

/// One checked identity.
struct Record {
  std::string name;
  std::string identity;  ///< the relation being checked, in operator notation
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  Subspace subspace = Subspace::Interior;
  Bound bound = Bound::Below;

  bool operator==(const Record&) const = default;
};

Record make_record(std::string name, std::string identity, Real residual, double tolerance, Subspace subspace,
                   Bound bound = Bound::Below);

using Fragment = std::vector<Record>;

bool all_pass(const Fragment& records);

/// Appends `more` to `into`.
void extend(Fragment& into, const Fragment& more);

const char* to_string(Subspace s);
const char* to_string(Bound b);

}  // namespace fsusy
