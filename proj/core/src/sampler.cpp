#include "capaug/sampler.hpp"

#include <algorithm>

#include "capaug/errors.hpp"

namespace capaug {

std::string_view sampler_name(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::Uniform: return "uniform";
    case SamplerKind::InverseMultinomial: return "inverse";
    case SamplerKind::CooccurrenceUpdating: return "occ";
  }
  return "uniform";
}

std::optional<SamplerKind> sampler_from_name(std::string_view name) {
  if (name == "uniform") return SamplerKind::Uniform;
  if (name == "inverse") return SamplerKind::InverseMultinomial;
  if (name == "occ") return SamplerKind::CooccurrenceUpdating;
  return std::nullopt;
}

CandidateSet candidate_set(const std::vector<ObjectId>& sentence_objects, ObjectId anchor,
                           ObjectId target, int n) {
  CandidateSet cs;
  cs.anchor = anchor;
  cs.target = target;
  cs.candidates.reserve(static_cast<std::size_t>(n));
  for (ObjectId k = 0; k < n; ++k) {
    if (std::find(sentence_objects.begin(), sentence_objects.end(), k) !=
        sentence_objects.end())
      continue;
    cs.candidates.push_back(k);
  }
  return cs;
}

SamplerState::SamplerState(SamplerKind kind, CooccurrenceMatrix working, int smoothing)
    : kind_(kind), matrix_(std::move(working)), smoothing_(smoothing) {
  if (kind_ != SamplerKind::Uniform && smoothing_ < 1)
    throw ValidationError("inverse-weight samplers need smoothing >= 1");
}

std::vector<double> SamplerState::weights(const CandidateSet& cs) const {
  if (cs.empty()) throw ValidationError("weights over an empty candidate set");
  const std::size_t count = cs.candidates.size();
  std::vector<double> w(count, 1.0 / static_cast<double>(count));
  if (kind_ == SamplerKind::Uniform) return w;

  const std::int64_t row_total = matrix_.row_sum(cs.anchor);
  if (row_total == 0) return w;  // degenerate row: uniform, like normalize_row

  const double pseudo =
      static_cast<double>(smoothing_) / static_cast<double>(matrix_.size());
  double sum = 0.0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const double normalized = static_cast<double>(matrix_.at(cs.anchor, cs.candidates[idx])) /
                              static_cast<double>(row_total);
    w[idx] = 1.0 / (normalized + pseudo);
    sum += w[idx];
  }
  for (double& v : w) v /= sum;
  return w;
}

ObjectId SamplerState::sample(const CandidateSet& cs, SplitRng& rng, bool force_uniform) {
  if (cs.empty()) throw ValidationError("sample from an empty candidate set");

  std::size_t drawn;
  if (force_uniform) {
    drawn = static_cast<std::size_t>(rng.next_below(cs.candidates.size()));
  } else {
    const std::vector<double> w = weights(cs);
    const double u = rng.next_double();
    double acc = 0.0;
    drawn = w.size() - 1;
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
      acc += w[idx];
      if (u < acc) {
        drawn = idx;
        break;
      }
    }
  }

  const ObjectId picked = cs.candidates[drawn];
  if (kind_ == SamplerKind::CooccurrenceUpdating) {
    matrix_.add_pair(cs.anchor, picked);
    matrix_.decrement_pair(cs.anchor, cs.target);  // no-op when anchor == target
  }
  return picked;
}

}  // namespace capaug
