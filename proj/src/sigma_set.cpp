#include "sigma_set.hpp"

#include <algorithm>
#include <bit>

namespace selfsim {

SigmaSet SigmaSet::from_digits(std::vector<ExactReal> digits,
                               std::optional<Rational> explicit_q) {
  if (digits.size() < 2) {
    throw Error(ErrorCode::Degenerate, "digit set needs at least 2 digits");
  }
  unsigned long d = 0;
  for (const auto& digit : digits) {
    if (digit.is_rational()) continue;
    if (d == 0) {
      d = digit.radicand();
    } else if (d != digit.radicand()) {
      throw Error(ErrorCode::MixedRadicals,
                  "digits mix distinct quadratic extensions");
    }
  }
  std::sort(digits.begin(), digits.end());
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] == digits[i - 1]) {
      throw Error(ErrorCode::Degenerate,
                  "duplicate digit " + digits[i].str());
    }
  }
  if (explicit_q) {
    if (*explicit_q <= 0 || *explicit_q >= 1) {
      throw Error(ErrorCode::Parse, "ratio must lie in (0,1)");
    }
  }
  SigmaSet out;
  out.digits_ = std::move(digits);
  out.explicit_q_ = std::move(explicit_q);
  out.shared_d_ = d;
  return out;
}

SigmaSet SigmaSet::parse(const std::string& digits_csv,
                         std::optional<Rational> explicit_q) {
  std::vector<ExactReal> digits;
  std::size_t start = 0;
  while (start <= digits_csv.size()) {
    std::size_t comma = digits_csv.find(',', start);
    std::size_t end = comma == std::string::npos ? digits_csv.size() : comma;
    digits.push_back(ExactReal::parse(digits_csv.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return from_digits(std::move(digits), std::move(explicit_q));
}

Rational SigmaSet::ratio() const {
  if (explicit_q_) return *explicit_q_;
  return make_rational(1, BigInt(static_cast<unsigned long>(size())));
}

bool SigmaSet::critical_ratio() const {
  return ratio() * BigInt(static_cast<unsigned long>(size())) == 1;
}

SigmaSet SigmaSet::with_ratio(Rational q) const {
  return from_digits(digits_, std::move(q));
}

SigmaSet SigmaSet::affine_image(const ExactReal& a, const ExactReal& b) const {
  if (a.is_zero()) {
    throw Error(ErrorCode::Degenerate, "affine image with zero scale");
  }
  std::vector<ExactReal> digits;
  digits.reserve(digits_.size());
  for (const auto& digit : digits_) digits.push_back(a * digit + b);
  return from_digits(std::move(digits), explicit_q_);
}

std::string SigmaSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ',';
    out += digits_[i].str();
  }
  return out;
}

std::vector<ExactReal> difference_set(const SigmaSet& sigma) {
  std::vector<ExactReal> diffs;
  diffs.reserve(sigma.size() * sigma.size());
  for (const auto& a : sigma.digits()) {
    for (const auto& b : sigma.digits()) diffs.push_back(a - b);
  }
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

std::optional<ExactReal> common_divisor(const SigmaSet& sigma) {
  std::vector<ExactReal> nonzero;
  for (const auto& d : difference_set(sigma)) {
    if (!d.is_zero()) nonzero.push_back(d);
  }
  if (sigma.all_rational()) {
    std::vector<Rational> rats;
    rats.reserve(nonzero.size());
    for (const auto& d : nonzero) rats.push_back(d.as_rational());
    return ExactReal(rational_set_gcd(rats));
  }
  // With a radical present, a common divisor exists iff all ratios of nonzero
  // differences are rational; then delta = gcd(ratios) * |base|.
  const ExactReal base = nonzero.front().abs();
  std::vector<Rational> ratios;
  ratios.reserve(nonzero.size());
  for (const auto& d : nonzero) {
    if (!ratio_is_rational(d, base)) return std::nullopt;
    ratios.push_back((d / base).as_rational());
  }
  return base * ExactReal(rational_set_gcd(ratios));
}

Normalization normalize(const SigmaSet& sigma) {
  auto delta = common_divisor(sigma);
  if (!delta) {
    throw Error(ErrorCode::NotApplicable,
                "irrational structure: difference set has no common divisor");
  }
  Normalization out;
  out.shift = sigma.min();
  out.delta = *delta;
  out.sigma_star.reserve(sigma.size());
  for (const auto& digit : sigma.digits()) {
    const Rational q = ((digit - out.shift) / out.delta).as_rational();
    if (q.get_den() != 1) {
      throw Error(ErrorCode::Internal, "normalization produced a non-integer");
    }
    out.sigma_star.push_back(q.get_num());
  }
  return out;
}

ResidueProfile residue_profile(const std::vector<BigInt>& values,
                               unsigned modulus) {
  if (modulus == 0) {
    throw Error(ErrorCode::Degenerate, "residue profile with modulus 0");
  }
  ResidueProfile out;
  out.modulus = modulus;
  std::vector<unsigned> counts(modulus, 0);
  for (const auto& v : values) {
    const unsigned r = static_cast<unsigned>(
        mpz_fdiv_ui(v.get_mpz_t(), modulus));
    out.residues.push_back(r);
    ++counts[r];
  }
  out.complete = values.size() == modulus;
  for (unsigned c : counts) out.complete = out.complete && c == 1;
  return out;
}

ResidueProfile residue_profile(const Normalization& norm, unsigned modulus) {
  return residue_profile(norm.sigma_star, modulus);
}

ExactReal max_gap(const SigmaSet& sigma) {
  ExactReal best = sigma.digits()[1] - sigma.digits()[0];
  for (std::size_t i = 2; i < sigma.size(); ++i) {
    ExactReal gap = sigma.digits()[i] - sigma.digits()[i - 1];
    if (gap > best) best = gap;
  }
  return best;
}

ExactReal interval_threshold(const SigmaSet& sigma) {
  ExactReal gap = max_gap(sigma);
  ExactReal diam = sigma.max() - sigma.min();
  return gap / (gap + diam);
}

ExactReal containment_threshold(const SigmaSet& sigma) {
  const std::size_t m = sigma.size();
  if (m > 20) {
    throw Error(ErrorCode::BoundExceeded,
                "subset enumeration too large (|Sigma| > 20)");
  }
  const auto& digits = sigma.digits();
  std::optional<ExactReal> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    int first = std::countr_zero(mask);
    int prev = first;
    int last = first;
    std::optional<ExactReal> gap;
    for (int i = first + 1; i < static_cast<int>(m); ++i) {
      if (!(mask & (1u << i))) continue;
      ExactReal g = digits[i] - digits[prev];
      if (!gap || g > *gap) gap = g;
      prev = i;
      last = i;
    }
    ExactReal diam = digits[last] - digits[first];
    ExactReal threshold = *gap / (*gap + diam);
    if (!best || threshold < *best) best = threshold;
  }
  return *best;
}

}  // namespace selfsim
