#include "ccm/projector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>
#include <unordered_map>

namespace ccm {

const char* to_string(DirectionMode mode) {
  switch (mode) {
    case DirectionMode::kAuto: return "auto";
    case DirectionMode::kCube: return "cube";
    case DirectionMode::kGenerators: return "generators";
    case DirectionMode::kImage: return "image";
  }
  return "auto";
}

DirectionMode parse_direction_mode(const std::string& name) {
  for (auto m : {DirectionMode::kAuto, DirectionMode::kCube, DirectionMode::kGenerators, DirectionMode::kImage})
    if (name == to_string(m)) return m;
  fail(ErrorKind::kInvalidArgument, "unknown direction mode \"" + name + "\"");
}

namespace {

constexpr std::size_t kMaxImageStates = 4'000'000;

DirectionSet from_images(Index d, Int radius_hint, std::vector<IntVec> images) {
  std::vector<IntVec> nonzero;
  for (auto& v : images)
    if (!is_zero(v)) nonzero.push_back(std::move(v));
  DirectionSet E = make_direction_set(d, nonzero);
  if (E.radius == 0) E.radius = radius_hint;
  return E;
}

DirectionSet generator_directions(const IntMatrix& W, Int e, const std::vector<IntVec>& gens) {
  std::vector<IntVec> images;
  for (const auto& g : gens) {
    if (g.size() != W.cols()) fail(ErrorKind::kDimensionMismatch, "edge generator of wrong length");
    if (is_zero(g) || l1_norm(primitive(g)) > e) continue;
    images.push_back(W * g);
  }
  return from_images(W.rows(), 0, std::move(images));
}

// All W g with g integer, |g_j| <= upper_j - lower_j and ||g||_1 <= e.
DirectionSet image_directions(const IntMatrix& W, Int e, const Box& box) {
  std::unordered_map<IntVec, Int, IntVecHash, IntVecEqual> used;  // image -> least l1 spent
  used.emplace(IntVec::Zero(W.rows()), 0);
  for (Index j = 0; j < W.cols(); ++j) {
    const IntVec col = W.col(j);
    if (is_zero(col)) continue;
    const Int range = std::min(box.upper(j) - box.lower(j), e);
    if (range <= 0) continue;
    std::vector<std::pair<IntVec, Int>> frontier(used.begin(), used.end());
    for (const auto& [y, spent] : frontier) {
      for (Int c = 1; c <= range && spent + c <= e; c += 1) {
        for (int s : {1, -1}) {
          IntVec z = y + col * (c * s);
          auto it = used.find(z);
          if (it == used.end()) {
            used.emplace(std::move(z), spent + c);
            if (used.size() > kMaxImageStates)
              fail(ErrorKind::kBudgetExceeded, "image direction set grew beyond the state budget");
          } else if (spent + c < it->second) {
            it->second = spent + c;
          }
        }
      }
    }
  }
  std::vector<IntVec> images;
  images.reserve(used.size());
  for (auto& [y, spent] : used) images.push_back(y);
  return from_images(W.rows(), 0, std::move(images));
}

// Runs body(i) for i in [0, count) on the given number of threads. The
// exception of the smallest failing index is rethrown.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void finish(ProjectionResult& result, const IntMatrix& W, const std::vector<IntVec>& hs,
            const std::vector<OracleAnswer>& answers) {
  // Distinct projections, each with its lexicographically smallest preimage
  // and the first chamber realizing that preimage.
  std::map<IntVec, std::pair<IntVec, std::size_t>, LexLess> best;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    IntVec y = W * answers[i].x;
    auto it = best.find(y);
    if (it == best.end())
      best.emplace(std::move(y), std::make_pair(answers[i].x, i));
    else if (lex_less(answers[i].x, it->second.first))
      it->second = {answers[i].x, i};
  }
  for (const auto& [y, pre] : best) {
    result.candidates.push_back(y);
    result.X.push_back(pre.first);
  }
  result.V = hull_vertices(result.candidates, W.rows());
  for (const auto& v : result.V) {
    const auto& [x, i] = best.at(v);
    result.certificates.push_back({v, hs[i], x});
  }
}

bool is_singleton(const LinearOracle& oracle, std::size_t& queries) {
  const Index n = oracle.dimension();
  for (Index i = 0; i < n; ++i) {
    IntVec w = IntVec::Zero(n);
    w(i) = 1;
    const Int hi = oracle.optimize(w).value;
    w(i) = -1;
    const Int lo = -oracle.optimize(w).value;
    queries += 2;
    if (hi != lo) return false;
  }
  return true;
}

}  // namespace

DirectionSet projection_directions(const LinearOracle& oracle, const ProjectionConfig& cfg, DirectionMode* used) {
  DirectionMode mode = cfg.mode;
  std::optional<std::vector<IntVec>> gens = cfg.edge_generators;
  if (!gens && (mode == DirectionMode::kAuto || mode == DirectionMode::kGenerators)) gens = oracle.edge_generators();
  std::optional<Box> box;
  if (mode == DirectionMode::kAuto) {
    if (gens) {
      mode = DirectionMode::kGenerators;
    } else if ((box = oracle.bounding_box())) {
      mode = DirectionMode::kImage;
    } else {
      mode = DirectionMode::kCube;
    }
  }
  if (used) *used = mode;
  switch (mode) {
    case DirectionMode::kGenerators:
      if (!gens) fail(ErrorKind::kInvalidArgument, "generator mode needs edge generators");
      return generator_directions(cfg.W, cfg.edge_bound, *gens);
    case DirectionMode::kImage:
      if (!box) box = oracle.bounding_box();
      if (!box) fail(ErrorKind::kInvalidArgument, "image mode needs a bounded oracle");
      return image_directions(cfg.W, cfg.edge_bound, *box);
    default:
      return direction_set(cfg.W.rows(), cfg.q());
  }
}

ProjectionResult project(const LinearOracle& oracle, const ProjectionConfig& cfg) {
  const IntMatrix& W = cfg.W;
  const Index d = W.rows();
  if (d < 1 || W.cols() < 1) fail(ErrorKind::kInvalidDimension, "W must have at least one row and column");
  if (W.cols() != oracle.dimension())
    fail(ErrorKind::kDimensionMismatch, "W has " + std::to_string(W.cols()) + " columns but the oracle has dimension " +
                                            std::to_string(oracle.dimension()));
  if (cfg.edge_bound < 0) fail(ErrorKind::kInvalidEdgeBound, "edge bound must be nonnegative");

  ProjectionResult result;
  std::vector<IntVec> hs;
  if (cfg.edge_bound == 0) {
    if (!is_singleton(oracle, result.queries))
      fail(ErrorKind::kInvalidEdgeBound, "edge bound 0 is only valid for a single-point feasible set");
  } else if (max_abs(W) != 0) {
    DirectionMode used = DirectionMode::kCube;
    const DirectionSet E = projection_directions(oracle, cfg, &used);
    result.mode_used = used;
    result.directions = E.size();
    if (!E.empty())
      for (auto& w : enumerate_chambers(E)) hs.push_back(std::move(w.h));
  }
  // With no generators conv(W S) is a point; the zero functional finds it.
  if (hs.empty()) hs.push_back(IntVec::Zero(d));
  result.chambers = hs.size();

  std::vector<OracleAnswer> answers(hs.size());
  parallel_for(hs.size(), cfg.threads, [&](std::size_t i) {
    answers[i] = oracle.optimize(W.transpose() * hs[i]);
  });
  result.queries += hs.size();
  finish(result, W, hs, answers);
  return result;
}

// ---------------------------------------------------------------------------

ConvexObjective ConvexObjective::linear(IntVec c) {
  ConvexObjective f;
  f.kind_ = Kind::kLinear;
  f.vectors_ = {std::move(c)};
  return f;
}

ConvexObjective ConvexObjective::max_of_linear(std::vector<IntVec> c, std::vector<Int> offsets) {
  if (c.empty() || c.size() != offsets.size())
    fail(ErrorKind::kInvalidArgument, "max_of_linear needs one offset per linear piece");
  for (const auto& v : c)
    if (v.size() != c.front().size()) fail(ErrorKind::kDimensionMismatch, "linear pieces of unequal length");
  ConvexObjective f;
  f.kind_ = Kind::kMaxOfLinear;
  f.vectors_ = std::move(c);
  f.offsets_ = std::move(offsets);
  return f;
}

ConvexObjective ConvexObjective::squared_euclidean(IntVec center) {
  ConvexObjective f;
  f.kind_ = Kind::kSquaredEuclidean;
  f.vectors_ = {std::move(center)};
  return f;
}

ConvexObjective ConvexObjective::weighted_p_norm(int p, IntVec weights) {
  if (p != 0 && p != 1 && p != 2) fail(ErrorKind::kInvalidArgument, "p must be 1, 2 or infinity");
  for (Index i = 0; i < weights.size(); ++i)
    if (weights(i) < 0) fail(ErrorKind::kInvalidArgument, "norm weights must be nonnegative");
  ConvexObjective f;
  f.kind_ = Kind::kWeightedPNorm;
  f.vectors_ = {std::move(weights)};
  f.p_ = p;
  return f;
}

Index ConvexObjective::dimension() const { return vectors_.front().size(); }

Rational ConvexObjective::key(const IntVec& y) const {
  if (y.size() != dimension()) fail(ErrorKind::kDimensionMismatch, "objective evaluated at a point of wrong dimension");
  const IntVec& v = vectors_.front();
  BigInt acc = 0;
  switch (kind_) {
    case Kind::kLinear:
      for (Index i = 0; i < y.size(); ++i) acc += BigInt(v(i).value()) * y(i).value();
      return Rational(acc);
    case Kind::kMaxOfLinear: {
      std::optional<BigInt> best;
      for (std::size_t k = 0; k < vectors_.size(); ++k) {
        BigInt s = offsets_[k].value();
        for (Index i = 0; i < y.size(); ++i) s += BigInt(vectors_[k](i).value()) * y(i).value();
        if (!best || s > *best) best = s;
      }
      return Rational(*best);
    }
    case Kind::kSquaredEuclidean:
      for (Index i = 0; i < y.size(); ++i) {
        const BigInt t = BigInt(y(i).value()) - v(i).value();
        acc += t * t;
      }
      return Rational(acc);
    case Kind::kWeightedPNorm:
      for (Index i = 0; i < y.size(); ++i) {
        const BigInt a = boost::multiprecision::abs(BigInt(y(i).value()));
        const BigInt term = p_ == 2 ? BigInt(v(i).value()) * a * a : BigInt(v(i).value()) * a;
        if (p_ == 0) acc = std::max(acc, term); else acc += term;
      }
      return Rational(acc);
  }
  return Rational(0);
}

int ConvexObjective::compare(const IntVec& y, const IntVec& z) const {
  const Rational a = key(y);
  const Rational b = key(z);
  return a < b ? -1 : (b < a ? 1 : 0);
}

std::optional<Rational> ConvexObjective::value(const IntVec& y) const {
  const Rational k = key(y);
  if (kind_ != Kind::kWeightedPNorm || p_ != 2) return k;
  const BigInt n = boost::multiprecision::numerator(k);
  const BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return Rational(r);
}

std::string ConvexObjective::value_string(const IntVec& y) const {
  if (auto v = value(y)) return to_fraction_string(*v);
  return "sqrt(" + to_fraction_string(key(y)) + ")";
}

MaximizeResult maximize(const LinearOracle& oracle, const ProjectionConfig& cfg, const ConvexObjective& f) {
  if (f.dimension() != cfg.W.rows())
    fail(ErrorKind::kDimensionMismatch, "objective dimension differs from the number of criteria");
  MaximizeResult out;
  out.projection = project(oracle, cfg);
  const auto& ys = out.projection.candidates;
  std::size_t best = 0;
  for (std::size_t i = 1; i < ys.size(); ++i)
    if (f.compare(ys[i], ys[best]) > 0) best = i;  // candidates are sorted, so ties keep the smaller y
  out.x = out.projection.X[best];
  out.y = ys[best];
  return out;
}

}  // namespace ccm
