#pragma once

#include <cmath>

namespace volte {

template <typename Scalar>
inline Scalar dbm_to_mw(Scalar dbm) {
  using std::pow;
  return pow(Scalar(10), dbm / Scalar(10));
}

template <typename Scalar>
inline Scalar mw_to_dbm(Scalar mw) {
  using std::log10;
  return Scalar(10) * log10(mw);
}

// Same conversions for dimensionless ratios.
template <typename Scalar>
inline Scalar db_to_linear(Scalar db) {
  return dbm_to_mw(db);
}

template <typename Scalar>
inline Scalar linear_to_db(Scalar ratio) {
  return mw_to_dbm(ratio);
}

}  // namespace volte
