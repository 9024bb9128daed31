#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"

namespace selfsim {

// Digit set Sigma with the implied ratio q = 1/|Sigma|, or an explicit
// rational q in (0,1) for threshold-style questions.
class SigmaSet {
 public:
  static SigmaSet from_digits(std::vector<ExactReal> digits,
                              std::optional<Rational> explicit_q = {});
  static SigmaSet parse(const std::string& digits_csv,
                        std::optional<Rational> explicit_q = {});

  std::size_t size() const { return digits_.size(); }
  const std::vector<ExactReal>& digits() const { return digits_; }
  const ExactReal& min() const { return digits_.front(); }
  const ExactReal& max() const { return digits_.back(); }
  Rational ratio() const;
  bool has_explicit_ratio() const { return explicit_q_.has_value(); }
  bool critical_ratio() const;
  bool all_rational() const { return shared_d_ == 0; }
  unsigned long radicand() const { return shared_d_; }

  SigmaSet with_ratio(Rational q) const;
  SigmaSet affine_image(const ExactReal& a, const ExactReal& b) const;
  std::string str() const;

 private:
  SigmaSet() = default;
  std::vector<ExactReal> digits_;
  std::optional<Rational> explicit_q_;
  unsigned long shared_d_ = 0;
};

struct Normalization {
  std::vector<BigInt> sigma_star;  // sorted, first entry 0, entry gcd 1
  ExactReal shift;                 // min digit
  ExactReal delta;                 // greatest common divisor of D(Sigma)
};

struct ResidueProfile {
  unsigned modulus = 0;
  std::vector<unsigned> residues;  // in digit order, with multiplicity
  bool complete = false;
};

std::vector<ExactReal> difference_set(const SigmaSet& sigma);
std::optional<ExactReal> common_divisor(const SigmaSet& sigma);
Normalization normalize(const SigmaSet& sigma);
ResidueProfile residue_profile(const Normalization& norm, unsigned modulus);
ResidueProfile residue_profile(const std::vector<BigInt>& values,
                               unsigned modulus);
ExactReal max_gap(const SigmaSet& sigma);
ExactReal interval_threshold(const SigmaSet& sigma);
ExactReal containment_threshold(const SigmaSet& sigma);

}  // namespace selfsim
