#include "amt/moduli.hpp"

#include "amt/error.hpp"

namespace amt {

ModuliSummary summarize(const Fan& f, const Multidegree& d) {
  if (!admissible(f, d)) throw DomainError("summarize: multidegree is not admissible");
  if (!d.nonnegative()) throw DomainError("summarize: multidegree has a negative entry");
  ModuliSummary s;
  s.degree = d;
  for (auto v : d.values) s.y_dim += v + 1;
  s.g_dim = static_cast<std::int64_t>(f.ray_count()) - static_cast<std::int64_t>(f.dim);
  s.w_dim = s.y_dim - s.g_dim;
  return s;
}

bool in_F_d(const WeakDeltaCollection& c) { return !is_nonvanishing(c); }

std::int64_t draw_bounded(Rng& rng, std::int64_t bound) {
  if (bound <= 0) return 0;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<std::int64_t>(rng() % span) - bound;
}

WeakDeltaCollection sample(std::shared_ptr<const Fan> fan, const Multidegree& d, Rng& rng,
                           std::int64_t coeff_bound) {
  if (!admissible(*fan, d)) throw DomainError("sample: multidegree is not admissible");
  if (!d.nonnegative()) throw DomainError("sample: multidegree has a negative entry");
  for (int attempt = 0; attempt <= kSampleRejectionBudget; ++attempt) {
    std::vector<BinaryForm> sections;
    for (auto deg : d.values) {
      RatVector coeffs(static_cast<std::size_t>(deg) + 1);
      for (auto& c : coeffs) c = static_cast<long>(draw_bounded(rng, coeff_bound));
      sections.emplace_back(std::move(coeffs));
    }
    WeakDeltaCollection c(fan, d, std::move(sections));
    if (is_nonvanishing(c)) return c;
  }
  throw DomainError("sample: rejection budget of " + std::to_string(kSampleRejectionBudget) +
                    " exhausted; F_d appears to have full measure at this coefficient bound");
}

}  // namespace amt
