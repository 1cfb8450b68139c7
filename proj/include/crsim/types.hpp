#pragma once

#include <armadillo>
#include <optional>

#include "crsim/errors.hpp"

namespace crsim {

/// Scenario constants for one cognitive-radio link sharing spectrum with a
/// primary radio. Powers are stored on a linear scale; the config file layer
/// converts from dB.
struct SystemConfig {
  int mp = 2;   ///< primary-radio antenna count M_p
  int m1 = 4;   ///< antennas at CR terminal 1
  int m2 = 4;   ///< antennas at CR terminal 2
  double alpha = 0.5;        ///< PR transmit duty fraction, in (0, 1]
  double sigma_s2 = 100.0;   ///< PR transmit power (linear)
  double sigma_n1_2 = 1.0;   ///< noise power at CR-T1
  double sigma_n2_2 = 1.0;   ///< noise power at CR-T2
  int n_frame = 1000;        ///< frame length N in symbols
  double power_total = 20000.0;  ///< CR frame power budget P
  /// Interference cap: either the coefficient chi1 directly, or the raw
  /// interference-temperature threshold zeta (chi1 is then derived from the
  /// learned beta1). Exactly one should be set.
  std::optional<double> chi1 = 0.16;
  std::optional<double> zeta;

  int k1() const { return m1 - mp; }
  int k2() const { return m2 - mp; }

  /// Throws ConfigError naming the violated constraint.
  void validate() const {
    if (mp < 1) throw ConfigError("mp: must be >= 1");
    if (m1 <= mp) throw ConfigError("m1: CR terminal 1 needs more antennas than the PR (m1 > mp)");
    if (m2 <= mp) throw ConfigError("m2: CR terminal 2 needs more antennas than the PR (m2 > mp)");
    if (k1() > k2()) throw ConfigError("m1/m2: requires k1 <= k2 (i.e. m1 <= m2)");
    if (!(alpha > 0.0) || alpha > 1.0) throw ConfigError("alpha: must lie in (0, 1]");
    if (!(sigma_s2 > 0.0)) throw ConfigError("sigma_s2: must be > 0");
    if (!(sigma_n1_2 > 0.0)) throw ConfigError("sigma_n1_2: must be > 0");
    if (!(sigma_n2_2 > 0.0)) throw ConfigError("sigma_n2_2: must be > 0");
    if (n_frame < k1() + 2)
      throw ConfigError("n_frame: must be >= k1 + 2 to fit learning, training and data stages");
    if (!(power_total > 0.0)) throw ConfigError("power_total: must be > 0");
    if (chi1 && zeta) throw ConfigError("chi1/zeta: set one of them, not both");
    if (!chi1 && !zeta) throw ConfigError("chi1/zeta: one of them is required");
    if (chi1 && !(*chi1 > 0.0)) throw ConfigError("chi1: must be > 0");
    if (zeta && !(*zeta > 0.0)) throw ConfigError("zeta: must be > 0");
  }
};

/// One realization of the complex channel matrices. Reverse channels are the
/// transposes (TDD reciprocity) and are never stored separately.
struct ChannelSet {
  arma::cx_mat g1;  ///< M1 x Mp, PR -> CR-T1
  arma::cx_mat g2;  ///< M2 x Mp, PR -> CR-T2
  arma::cx_mat h;   ///< M2 x M1, CR-T1 -> CR-T2
};

/// Block of primary-radio transmit vectors; silent symbols are exact zeros.
struct PrSignalBlock {
  arma::cx_mat symbols;  ///< Mp x L, column per symbol
  arma::uvec activity;   ///< length L, 1 where the PR transmits
};

/// Block of received samples at one CR terminal.
struct ReceivedBlock {
  arma::cx_mat samples;  ///< Mj x L (or Kj x L after receive beamforming)
};

}  // namespace crsim
