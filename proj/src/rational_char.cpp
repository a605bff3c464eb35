#include "hypertoric/rational_char.hpp"

namespace hypertoric {

RationalChar sum_ratios(const CharLattice& lat,
                        const std::vector<std::pair<LaurentPoly, LaurentPoly>>& terms) {
  if (terms.empty()) return RationalChar::zero(lat);
  const size_t m = terms.size();
  std::vector<LaurentPoly> prefix(m + 1, LaurentPoly::one(lat));
  std::vector<LaurentPoly> suffix(m + 1, LaurentPoly::one(lat));
  for (size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * terms[i].second;
  for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * terms[i].second;
  LaurentPoly num(lat);
  for (size_t i = 0; i < m; ++i) num += terms[i].first * prefix[i] * suffix[i + 1];
  return RationalChar(num, prefix[m]);
}

}  // namespace hypertoric
