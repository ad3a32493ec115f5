#include "maxface/configuration.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace maxface {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::NonZeroGrowthSum: return "NonZeroGrowthSum";
    case ErrorKind::NotAPole: return "NotAPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::RepeatedRoot: return "RepeatedRoot";
    case ErrorKind::Unbalanced: return "Unbalanced";
    case ErrorKind::NoMirror: return "NoMirror";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::DisksOverlap: return "DisksOverlap";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::PathThroughPole: return "PathThroughPole";
    case ErrorKind::UnreachablePoint: return "UnreachablePoint";
    case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
    case ErrorKind::SeamMismatch: return "SeamMismatch";
    case ErrorKind::NoImprovement: return "NoImprovement";
    case ErrorKind::MeshFailure: return "MeshFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, double value)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      value_(value) {}

namespace {

bool coincide(Complex a, Complex b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

[[noreturn]] void reject(const std::string& msg) {
  throw Error(ErrorKind::InvalidConfiguration, msg);
}

}  // namespace

Configuration::Configuration(std::vector<std::vector<Complex>> positions,
                             std::vector<double> growths)
    : positions_(std::move(positions)), growths_(std::move(growths)) {
  const int L = plane_count();
  if (L < 2) reject("need at least 2 planes");
  if (static_cast<int>(positions_.size()) != L - 1) {
    std::ostringstream os;
    os << "expected " << L - 1 << " levels of necks, got " << positions_.size();
    reject(os.str());
  }
  for (double q : growths_)
    if (!std::isfinite(q)) reject("non-finite growth");
  for (int l = 1; l < L; ++l) {
    const auto& lev = positions_[l - 1];
    if (lev.empty()) reject("level " + std::to_string(l) + " has no necks");
    for (std::size_t k = 0; k < lev.size(); ++k) {
      if (!std::isfinite(lev[k].real()) || !std::isfinite(lev[k].imag()))
        reject("non-finite position at (" + std::to_string(l) + "," + std::to_string(k + 1) + ")");
      for (std::size_t j = 0; j < k; ++j)
        if (coincide(lev[k], lev[j]))
          reject("coincident necks (" + std::to_string(l) + "," + std::to_string(j + 1) +
                 ") and (" + std::to_string(l) + "," + std::to_string(k + 1) + ")");
    }
    if (l >= 2) {
      const auto& below = positions_[l - 2];
      for (std::size_t k = 0; k < lev.size(); ++k)
        for (std::size_t j = 0; j < below.size(); ++j)
          if (coincide(lev[k], below[j]))
            reject("necks (" + std::to_string(l - 1) + "," + std::to_string(j + 1) + ") and (" +
                   std::to_string(l) + "," + std::to_string(k + 1) +
                   ") share a position on plane " + std::to_string(l));
    }
  }
  offsets_.assign(L, 0);
  for (int l = 1; l < L; ++l) offsets_[l] = offsets_[l - 1] + static_cast<int>(positions_[l - 1].size());
  total_ = offsets_[L - 1];
}

int Configuration::necks_at(int level) const {
  if (level < 1 || level >= plane_count()) return 0;
  return static_cast<int>(positions_[level - 1].size());
}

const std::vector<Complex>& Configuration::positions(int level) const {
  static const std::vector<Complex> none;
  if (level < 1 || level >= plane_count()) return none;
  return positions_[level - 1];
}

Complex Configuration::position(NeckId neck) const {
  if (!contains(neck)) reject("neck out of range");
  return positions_[neck.level - 1][neck.index - 1];
}

double Configuration::growth(int plane) const { return growths_.at(plane - 1); }

bool Configuration::contains(NeckId neck) const {
  return neck.level >= 1 && neck.level < plane_count() && neck.index >= 1 &&
         neck.index <= necks_at(neck.level);
}

std::vector<NeckId> Configuration::necks() const {
  std::vector<NeckId> out;
  out.reserve(total_);
  for (int l = 1; l < plane_count(); ++l)
    for (int k = 1; k <= necks_at(l); ++k) out.push_back({l, k});
  return out;
}

int Configuration::flat_index(NeckId neck) const {
  return offsets_[neck.level - 1] + neck.index - 1;
}

Configuration Configuration::with_positions(std::vector<std::vector<Complex>> positions) const {
  return Configuration(std::move(positions), growths_);
}

Configuration Configuration::translated(Complex shift) const {
  auto p = positions_;
  for (auto& lev : p)
    for (auto& z : lev) z += shift;
  return with_positions(std::move(p));
}

Configuration Configuration::scaled(Complex factor) const {
  auto p = positions_;
  for (auto& lev : p)
    for (auto& z : lev) z *= factor;
  return with_positions(std::move(p));
}

double NeckSizes::at(int level) const {
  if (level < 1 || level > static_cast<int>(c.size())) return 0.0;
  return c[level - 1];
}

NeckSizes neck_sizes(const Configuration& config) {
  const auto& Q = config.growths();
  double sum = std::accumulate(Q.begin(), Q.end(), 0.0);
  if (std::abs(sum) > 1e-12) {
    std::ostringstream os;
    os << "sum of Q is " << sum;
    throw Error(ErrorKind::NonZeroGrowthSum, os.str(), sum);
  }
  NeckSizes out;
  double prev = 0.0;
  for (int l = 1; l < config.plane_count(); ++l) {
    double cl = (config.necks_at(l - 1) * prev - config.growth(l)) / config.necks_at(l);
    out.c.push_back(cl);
    prev = cl;
  }
  return out;
}

Complex LevelForm::value(Complex z) const {
  Complex s = 0.0;
  for (const auto& p : poles) s += p.residue / (z - p.position);
  return s;
}

LevelForm level_form(const Configuration& config, const NeckSizes& sizes, int plane) {
  if (plane < 1 || plane > config.plane_count()) reject("plane out of range");
  LevelForm form;
  for (Complex p : config.positions(plane)) form.poles.push_back({p, -sizes.at(plane)});
  for (Complex p : config.positions(plane - 1)) form.poles.push_back({p, sizes.at(plane - 1)});
  return form;
}

}  // namespace maxface
