#include "hypersieve/sequence.hpp"

#include <utility>

#include "hypersieve/error.hpp"

namespace hypersieve {

GammaSequence::GammaSequence(std::vector<Rational> prefix, TailRule tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (prefix_.empty()) throw Error(ErrorCode::InvalidSequence, "sequence prefix is empty");
  if (std::holds_alternative<tail::Geometric>(tail_) && prefix_.back() == 0) {
    throw Error(ErrorCode::InvalidSequence, "geometric tail needs a nonzero last prefix term");
  }
}

Rational GammaSequence::at(std::size_t k) const {
  const std::size_t m = prefix_.size() - 1;
  if (k <= m) return prefix_[k];
  if (std::holds_alternative<tail::Zeros>(tail_)) return 0;
  if (std::holds_alternative<tail::Constant>(tail_)) return prefix_.back();
  const auto& ratio = std::get<tail::Geometric>(tail_).ratio;
  return prefix_.back() * pow(ratio, static_cast<unsigned>(k - m));
}

GammaSequence power_sequence(const GammaSequence& g, unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "power_sequence needs m >= 1");
  std::vector<Rational> prefix;
  prefix.reserve(g.prefix().size());
  for (const auto& v : g.prefix()) prefix.push_back(pow(v, m));
  TailRule t = g.tail();
  if (auto* geo = std::get_if<tail::Geometric>(&t)) geo->ratio = pow(geo->ratio, m);
  return GammaSequence(std::move(prefix), std::move(t));
}

GammaSequence scale_sequence(const GammaSequence& g, const Rational& r) {
  std::vector<Rational> prefix;
  prefix.reserve(g.prefix().size());
  for (const auto& v : g.prefix()) prefix.push_back(v * r);
  TailRule t = g.tail();
  // A geometric tail after a zero term collapses to zeros.
  if (r == 0 && std::holds_alternative<tail::Geometric>(t)) t = tail::Zeros{};
  return GammaSequence(std::move(prefix), std::move(t));
}

}  // namespace hypersieve
