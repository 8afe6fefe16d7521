#include "fmzv/crt_pipeline.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include "fmzv/parallel.hpp"

namespace fmzv {

KeyPolicy parse_key_policy(std::string_view name) {
  if (name == "cost") return KeyPolicy::CostModel;
  if (name == "all") return KeyPolicy::AllPrimes;
  if (name == "none") return KeyPolicy::NoPrimes;
  throw ConfigError("unknown key policy '" + std::string(name) + "'");
}

void validate(const PipelineConfig& config) {
  std::set<std::uint64_t> seen;
  for (const Prime& p : config.primes) {
    if (!seen.insert(p.value()).second) throw ConfigError("prime " + std::to_string(p.value()) + " repeated");
    if (p.value() <= config.bound) {
      throw ConfigError("prime " + std::to_string(p.value()) + " does not exceed the bound " +
                        std::to_string(config.bound));
    }
    if (p.value() <= config.weight) {
      throw ConfigError("prime " + std::to_string(p.value()) + " does not exceed the weight");
    }
  }
  if (config.primes.empty()) throw ConfigError("at least one prime is required");
  if (config.safety_factor < 0) throw ConfigError("safety factor must be non-negative");
}

BigInt modulus_product(std::span<const Prime> primes) {
  BigInt n = 1;
  for (const Prime& p : primes) n *= p.value();
  return n;
}

namespace {

std::uint64_t saturate(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max())) return kSaturated;
  return v.convert_to<std::uint64_t>();
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

double log10_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const std::string digits = v.str();
  const std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  return std::log10(std::stod(digits.substr(0, lead))) + static_cast<double>(digits.size() - lead);
}

}  // namespace

std::uint64_t cost_l(std::uint64_t bound, std::uint64_t /*generators*/, std::uint64_t left, std::uint64_t right,
                     std::uint64_t total, std::uint64_t processed, std::uint64_t key_length,
                     const BigInt& partial_modulus) {
  if (processed > total) throw Error("cost_l: processed count exceeds total");
  if (partial_modulus < 1) throw Error("cost_l: modulus must be positive");
  const BigInt left_space = big_pow(bound, left);
  const BigInt value =
      left_space * key_length + BigInt(total - processed) * big_pow(bound, right + 1) * (left_space / partial_modulus);
  return saturate(value);
}

std::uint64_t dimension_recursion(std::uint32_t w) {
  std::vector<std::uint64_t> d{1, 0, 0, 1};
  for (std::uint32_t k = 4; k <= w; ++k) d.push_back(d[k - 2] + d[k - 3]);
  return d[w];
}

GuardReport vanishing_guard(const PipelineConfig& config, std::uint64_t d_estimate) {
  GuardReport report;
  report.modulus = modulus_product(config.primes);
  report.d_estimate = d_estimate;
  report.safety_factor = config.safety_factor;
  const BigInt count = config.weight == 0 ? BigInt(1) : BigInt(1) << (config.weight - 1);
  report.threshold = count * big_pow(config.bound, 2 * d_estimate + 2);
  report.compact_threshold = count * big_pow(config.bound, d_estimate);
  report.pass = report.modulus >= config.safety_factor * report.threshold;
  const double log_n = log10_big(report.modulus);
  report.log10_ratio = report.threshold == 0 ? std::numeric_limits<double>::infinity()
                                             : log_n - log10_big(report.threshold);
  report.log10_compact_ratio = report.compact_threshold == 0 ? std::numeric_limits<double>::infinity()
                                                             : log_n - log10_big(report.compact_threshold);
  return report;
}

bool RelationRecord::trivial() const {
  for (std::size_t i = 0; i + 1 < coefficients.size(); ++i) {
    if (coefficients[i] != 0) return false;
  }
  return true;
}

namespace {

// Residue-tuple dynamic MITM state. Generator multiples are stored flat:
// multiples_[d][b * L + l] = c[b] * z(x_d) mod p_l.
class ResidueSearch {
 public:
  ResidueSearch(const PipelineConfig& config, const HarmonicSums& sums)
      : config_(config), sums_(sums), coefficients_(config.bound), base_(coefficients_.size()) {
    for (const Prime& p : config.primes) {
      moduli_.push_back(p.value());
      widths_.push_back(residue_byte_width(p.value()));
    }
    if (config.key_policy == KeyPolicy::AllPrimes) {
      key_length_ = moduli_.size();
      partial_modulus_ = modulus_product(config.primes);
    }
    dictionary_[key_of(std::vector<std::uint64_t>(moduli_.size(), 0))].push_back(0);
  }

  PipelineResult run();

 private:
  std::size_t L() const { return moduli_.size(); }

  std::string key_of(const std::vector<std::uint64_t>& element) const {
    std::string key;
    for (std::size_t l = 0; l < key_length_; ++l) append_packed(key, element[l], widths_[l]);
    return key;
  }

  void add_multiple(std::vector<std::uint64_t>& acc, std::size_t generator, std::uint32_t b) const {
    const std::uint64_t* m = &multiples_[generator][static_cast<std::size_t>(b) * L()];
    for (std::size_t l = 0; l < L(); ++l) acc[l] = add_mod(acc[l], m[l], moduli_[l]);
  }

  std::vector<std::uint64_t> left_sum(std::uint64_t rank) const {
    std::vector<std::uint32_t> digits(left_);
    unrank_tuple(rank, base_, digits);
    std::vector<std::uint64_t> sum(L(), 0);
    for (std::size_t d = 0; d < left_; ++d) add_multiple(sum, d, digits[d]);
    return sum;
  }

  // y = c * z + right sum for right tuple `rank`; returns a left rank whose
  // sum cancels y on every coordinate.
  std::optional<std::uint64_t> probe(const std::vector<std::uint64_t>& target, std::uint64_t rank) const;

  void accept(std::size_t h, std::uint64_t total);
  void rebuild();

  const PipelineConfig& config_;
  const HarmonicSums& sums_;
  CoefficientArray coefficients_;
  std::uint64_t base_;
  std::vector<std::uint64_t> moduli_;
  std::vector<int> widths_;

  std::vector<std::size_t> generators_;  // positions in K_w
  std::vector<std::vector<std::uint64_t>> multiples_;
  std::size_t key_length_ = 0;
  BigInt partial_modulus_ = 1;
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t rebuilds_ = 0;
  std::unordered_map<std::string, std::vector<std::uint64_t>> dictionary_;
};

std::optional<std::uint64_t> ResidueSearch::probe(const std::vector<std::uint64_t>& target,
                                                  std::uint64_t rank) const {
  std::vector<std::uint32_t> digits(right_);
  unrank_tuple(rank, base_, digits);
  std::vector<std::uint64_t> y = target;
  for (std::size_t d = 0; d < right_; ++d) add_multiple(y, left_ + d, digits[d]);
  std::vector<std::uint64_t> want(L());
  for (std::size_t l = 0; l < L(); ++l) want[l] = sub_mod(0, y[l], moduli_[l]);
  const std::string key = key_of(want);
  auto it = dictionary_.find(key);
  if (it == dictionary_.end()) return std::nullopt;

  auto cancels = [&](const std::vector<std::uint64_t>& sum, std::size_t from) {
    for (std::size_t l = from; l < L(); ++l) {
      if (sum[l] != want[l]) return false;
    }
    return true;
  };
  if (!config_.keys_only) {
    for (std::uint64_t left_rank : it->second) {
      if (key_length_ == L() || cancels(left_sum(left_rank), key_length_)) return left_rank;
    }
    return std::nullopt;
  }
  // Keys-only dictionaries keep no tuples; recover them by enumeration.
  const std::uint64_t count = tuple_space_size(base_, left_);
  for (std::uint64_t left_rank = 0; left_rank < count; ++left_rank) {
    if (cancels(left_sum(left_rank), 0)) return left_rank;
  }
  return std::nullopt;
}

void ResidueSearch::rebuild() {
  dictionary_.clear();
  const std::uint64_t count = tuple_space_size(base_, left_);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    auto& bucket = dictionary_[key_of(left_sum(rank))];
    if (!config_.keys_only) bucket.push_back(rank);
  }
  ++rebuilds_;
}

void ResidueSearch::accept(std::size_t h, std::uint64_t total) {
  const auto& z = sums_.vectors()[h].values;
  generators_.push_back(h);
  std::vector<std::uint64_t> flat(base_ * L());
  for (std::size_t b = 0; b < base_; ++b) {
    for (std::size_t l = 0; l < L(); ++l) flat[b * L() + l] = mul_mod(reduce_signed(coefficients_[b], moduli_[l]), z[l], moduli_[l]);
  }
  multiples_.push_back(std::move(flat));

  if (!should_grow_left(config_.left_policy, config_.bound, left_, right_, total, h)) {
    ++right_;
    return;
  }
  ++left_;
  if (config_.key_policy == KeyPolicy::CostModel && key_length_ < L()) {
    const std::uint64_t D = generators_.size();
    const std::uint64_t stay = cost_l(config_.bound, D, left_, right_, total, h, key_length_, partial_modulus_);
    const std::uint64_t extend = cost_l(config_.bound, D, left_, right_, total, h, key_length_ + 1,
                                        partial_modulus_ * moduli_[key_length_]);
    if (stay > extend) {
      partial_modulus_ *= moduli_[key_length_];
      ++key_length_;
    }
  }
  rebuild();
}

PipelineResult ResidueSearch::run() {
  PipelineResult result;
  const auto vectors = sums_.vectors();
  const std::uint64_t total = vectors.size();
  struct Found {
    std::size_t h;
    std::vector<std::int64_t> coefficients;  // over generators at the time, then target
  };
  std::vector<Found> found;

  for (std::size_t h = 0; h < total; ++h) {
    const auto& z = vectors[h].values;
    if (vectors[h].is_zero()) {
      found.push_back({h, {1}});
      ++result.stats.zero_vectors;
      continue;
    }
    const std::uint64_t right_count = tuple_space_size(base_, right_);
    bool generated = false;
    for (std::int64_t c = 1; c <= static_cast<std::int64_t>(config_.bound) && !generated; ++c) {
      std::vector<std::uint64_t> target(L());
      for (std::size_t l = 0; l < L(); ++l) target[l] = mul_mod(static_cast<std::uint64_t>(c) % moduli_[l], z[l], moduli_[l]);
      auto rank = find_first(
          right_count, [&](std::uint64_t r) { return probe(target, r).has_value(); }, config_.workers);
      if (!rank) continue;
      const std::uint64_t left_rank = *probe(target, *rank);
      std::vector<std::uint32_t> positions(left_ + right_);
      unrank_tuple(left_rank, base_, std::span(positions).first(left_));
      unrank_tuple(*rank, base_, std::span(positions).subspan(left_));
      Found f{h, {}};
      for (std::uint32_t b : positions) f.coefficients.push_back(coefficients_[b]);
      f.coefficients.push_back(c);
      found.push_back(std::move(f));
      generated = true;
    }
    if (!generated) accept(h, total);
  }

  for (std::size_t g : generators_) result.basis.push_back(vectors[g].index);
  for (const Found& f : found) {
    RelationRecord rec;
    rec.basis = result.basis;
    rec.target = vectors[f.h].index;
    rec.coefficients.assign(result.basis.size() + 1, 0);
    for (std::size_t i = 0; i + 1 < f.coefficients.size(); ++i) rec.coefficients[i] = f.coefficients[i];
    rec.coefficients.back() = f.coefficients.back();
    result.relations.push_back(std::move(rec));
  }
  result.stats.key_length = key_length_;
  result.stats.left_length = left_;
  result.stats.right_length = right_;
  result.stats.rebuilds = rebuilds_;
  return result;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config, const HarmonicSums& sums) {
  validate(config);
  if (sums.primes().size() != config.primes.size() ||
      !std::equal(sums.primes().begin(), sums.primes().end(), config.primes.begin())) {
    throw ConfigError("harmonic sums were computed for a different prime list");
  }
  ResidueSearch search(config, sums);
  return search.run();
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  validate(config);
  HarmonicOptions options;
  options.workers = config.workers;
  const HarmonicSums sums = mod_harmonic_sums(config.primes, config.weight, options);
  return run_pipeline(config, sums);
}

bool VerificationReport::holds() const {
  return std::all_of(residues.begin(), residues.end(), [](std::uint64_t r) { return r == 0; });
}

std::uint64_t record_weight(const RelationRecord& record) {
  const std::uint64_t w = record.target.weight();
  for (const Index& k : record.basis) {
    if (k.weight() != w) {
      throw WeightMismatch("index " + k.to_string() + " has weight " + std::to_string(k.weight()) + ", expected " +
                           std::to_string(w));
    }
  }
  if (record.coefficients.size() != record.basis.size() + 1) {
    throw Error("relation for " + record.target.to_string() + " needs " + std::to_string(record.basis.size() + 1) +
                " coefficients");
  }
  return w;
}

VerificationReport verify_relation(const RelationRecord& record, const HarmonicSums& sums) {
  record_weight(record);
  VerificationReport report;
  const auto primes = sums.primes();
  report.residues.assign(primes.size(), 0);
  for (std::size_t i = 0; i <= record.basis.size(); ++i) {
    const Index& k = i < record.basis.size() ? record.basis[i] : record.target;
    const auto& z = sums.at(k).values;
    for (std::size_t l = 0; l < primes.size(); ++l) {
      const std::uint64_t p = primes[l].value();
      report.residues[l] = add_mod(report.residues[l], mul_mod(reduce_signed(record.coefficients[i], p), z[l], p), p);
    }
  }
  return report;
}

VerificationReport verify_relation(const RelationRecord& record, std::span<const Prime> primes) {
  const std::uint64_t w = record_weight(record);
  for (const Prime& p : primes) {
    if (p.value() <= w) throw ConfigError("prime " + std::to_string(p.value()) + " does not exceed the weight");
  }
  std::vector<Index> indices = record.basis;
  indices.push_back(record.target);
  return verify_relation(record, harmonic_sums_for(primes, indices));
}

}  // namespace fmzv
