#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anzb/real.hpp"

namespace anzb {

/// Ascending table of positive ordinates of nontrivial zeta zeros on the
/// critical line, with a per-entry absolute accuracy. Immutable after load.
class ZeroTable {
  public:
    static ZeroTable load(std::istream& in, double accuracy = 2e-9);
    static ZeroTable load_file(const std::string& path, double accuracy = 2e-9);

    size_t count() const { return gamma_.size(); }
    const std::vector<double>& ordinates() const { return gamma_; }
    double accuracy() const { return accuracy_; }
    double max_height() const { return gamma_.empty() ? 0.0 : gamma_.back(); }
    long count_below(double height) const;

    /// Table truncated to ordinates below the given height (coverage-fault
    /// experiments).
    ZeroTable truncated(double height) const;

  private:
    std::vector<double> gamma_;
    double accuracy_ = 2e-9;
};

/// Parses '#'-comment text, one positive decimal ordinate per line, strictly
/// ascending. DataError on malformed or non-monotone input.
ZeroTable load_zeros(std::istream& in, double accuracy = 2e-9);

}  // namespace anzb
