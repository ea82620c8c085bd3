#ifndef ACTIME_TIME_SERIES_HPP
#define ACTIME_TIME_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actime/errors.hpp"

namespace actime {

/// Immutable scalar series, the common input of every estimator.
///
/// All elements are finite; construction throws NonFiniteValue otherwise.
/// The optional label/seed/meta fields carry provenance (generator kind,
/// parameters, acceptance rates) and survive prefix() and serialization.
class TimeSeries {
public:
  explicit TimeSeries(std::vector<double> values, std::string label = {},
                      std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  const std::string& label() const noexcept { return label_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  const std::map<std::string, std::string>& meta() const noexcept { return meta_; }
  void set_meta(const std::string& key, std::string value) { meta_[key] = std::move(value); }

  /// First `length` elements, metadata preserved. Throws BadLength.
  TimeSeries prefix(std::size_t length) const;

private:
  std::vector<double> values_;
  std::string label_;
  std::optional<std::uint64_t> seed_;
  std::map<std::string, std::string> meta_;
};

} // namespace actime

#endif // ACTIME_TIME_SERIES_HPP
