#include "mfa/system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mfa/error.hpp"

namespace mfa {
namespace {

constexpr double kGeometryTolerance = 1e-12;

bool in_open_unit(double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; }

}  // namespace

std::span<const double> WeightedSystem::translations() const noexcept {
  if (!translations_) return {};
  return *translations_;
}

RawSystem WeightedSystem::raw() const { return RawSystem{probs_, ratios_, translations_}; }

WeightedSystem validate_system(const RawSystem& raw) {
  const std::size_t m = raw.probs.size();
  if (m < 2) throw Error(ErrorKind::Arity, "need at least 2 maps, got " + std::to_string(m));
  if (raw.ratios.size() != m) {
    throw Error(ErrorKind::Arity, "probs has " + std::to_string(m) + " entries but ratios has " +
                                      std::to_string(raw.ratios.size()));
  }
  if (raw.translations && raw.translations->size() != m) {
    throw Error(ErrorKind::Arity, "translations has " + std::to_string(raw.translations->size()) +
                                      " entries, expected " + std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!in_open_unit(raw.probs[i])) {
      throw Error(ErrorKind::Range, "probs[" + std::to_string(i) + "] not in (0,1)");
    }
    if (!in_open_unit(raw.ratios[i])) {
      throw Error(ErrorKind::Range, "ratios[" + std::to_string(i) + "] not in (0,1)");
    }
  }
  const double sum = std::accumulate(raw.probs.begin(), raw.probs.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorKind::WeightSum, "probs sum to " + std::to_string(sum) + ", not 1");
  }

  if (raw.translations) {
    const auto& t = *raw.translations;
    for (std::size_t i = 0; i < m; ++i) {
      if (!std::isfinite(t[i]) || t[i] < -kGeometryTolerance ||
          t[i] + raw.ratios[i] > 1.0 + kGeometryTolerance) {
        throw Error(ErrorKind::Range,
                    "image of map " + std::to_string(i) + " is not contained in [0,1]");
      }
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return t[a] < t[b]; });
    for (std::size_t k = 0; k + 1 < m; ++k) {
      const std::size_t a = order[k];
      const std::size_t b = order[k + 1];
      if (t[b] < t[a] + raw.ratios[a] - kGeometryTolerance) {
        throw Error(ErrorKind::Overlap, "images of maps " + std::to_string(a) + " and " +
                                            std::to_string(b) + " overlap");
      }
    }
  }

  WeightedSystem sys;
  sys.probs_ = raw.probs;
  sys.ratios_ = raw.ratios;
  sys.translations_ = raw.translations;
  sys.log_probs_.resize(m);
  sys.log_ratios_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    sys.log_probs_[i] = std::log(raw.probs[i]);
    sys.log_ratios_[i] = std::log(raw.ratios[i]);
  }
  const double first = sys.symbol_ratio(0);
  sys.degenerate_ = true;
  for (std::size_t i = 1; i < m; ++i) {
    if (std::abs(sys.symbol_ratio(i) - first) > 1e-12 * std::max(1.0, std::abs(first))) {
      sys.degenerate_ = false;
      break;
    }
  }
  return sys;
}

double WordStats::p() const { return std::exp(log_p); }
double WordStats::r() const { return std::exp(log_r); }

WordStats word_stats(const WeightedSystem& sys, const Word& word) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "word_stats needs a nonempty word");
  WordStats out;
  for (Symbol s : word) {
    if (s >= sys.size()) {
      throw Error(ErrorKind::Range, "symbol " + std::to_string(s + 1) + " outside alphabet");
    }
    out.log_p += sys.log_probs()[s];
    out.log_r += sys.log_ratios()[s];
  }
  out.ratio = out.log_p / out.log_r;
  return out;
}

std::size_t argmin_symbol(const WeightedSystem& sys) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sys.size(); ++i) {
    if (sys.symbol_ratio(i) < sys.symbol_ratio(best)) best = i;
  }
  return best;
}

std::size_t argmax_symbol(const WeightedSystem& sys) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sys.size(); ++i) {
    if (sys.symbol_ratio(i) > sys.symbol_ratio(best)) best = i;
  }
  return best;
}

AlphaBounds alpha_bounds(const WeightedSystem& sys) {
  const double lo = sys.symbol_ratio(argmin_symbol(sys));
  if (sys.degenerate()) return {lo, lo};
  return {lo, sys.symbol_ratio(argmax_symbol(sys))};
}

std::uint64_t system_fingerprint(const WeightedSystem& sys) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::span<const double> values) {
    for (double v : values) {
      const auto bits = std::bit_cast<std::uint64_t>(v);
      for (int b = 0; b < 8; ++b) {
        h ^= (bits >> (8 * b)) & 0xffU;
        h *= 1099511628211ULL;
      }
    }
    h ^= 0xffU;  // field separator
    h *= 1099511628211ULL;
  };
  mix(sys.probs());
  mix(sys.ratios());
  mix(sys.translations());
  return h;
}

}  // namespace mfa
