#include "monounion/growth.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "monounion/errors.hpp"

namespace monounion {

exp_t weight_of(const Weights& d, Element e) {
  return checked_mul(d.of(e.gen), e.exp);
}

LetterBound compute_letter_bound(const Engine& eng,
                                 const PersistenceGraph& graph,
                                 const Weights& d, exp_t horizon) {
  const SemigroupSpec& spec = eng.spec();
  LetterBound k;
  k.horizon = horizon;
  k.generator_max = 1;
  for (gen_t g = 0; g < spec.size(); ++g)
    k.generator_max = std::max(k.generator_max, d.of(g));
  k.value = k.generator_max;

  std::map<std::pair<gen_t, gen_t>, exp_t> edge_bounds;
  for (gen_t x = 0; x < spec.size(); ++x) {
    for (gen_t y = 0; y < spec.size(); ++y) {
      Trajectory t = trajectory(eng, Element{x, 1}, y, horizon);
      if (!t.period) {
        std::ostringstream msg;
        msg << "trajectory of " << spec.name(x) << " under " << spec.name(y)
            << " has no certified period within horizon " << horizon
            << "; raise the horizon";
        throw HorizonExhausted(msg.str());
      }
      for (const TargetSummary& s : t.targets) {
        // Targets inside the periodic regime recur forever; the defect can
        // only stop growing along them if the weight inequality for the
        // matching edge applies, so the edge must exist.
        if (s.hits.back() >= t.period_start && !graph.has_edge(y, s.target)) {
          std::ostringstream msg;
          msg << "recurring target " << spec.name(s.target) << " under "
              << spec.name(y) << " has no return witness; raise the return "
              << "search bounds";
          throw HorizonExhausted(msg.str());
        }
        exp_t value = checked_sub(checked_mul(d.of(s.target), s.first_exp),
                                  checked_mul(d.of(y), s.first_index));
        auto [it, inserted] = edge_bounds.try_emplace({y, s.target}, value);
        if (!inserted) it->second = std::max(it->second, value);
      }

      DefectPeak peak{x, y, 0, 0};
      for (exp_t i = 1; i <= horizon; ++i) {
        exp_t w = weight_of(d, t.steps[static_cast<std::size_t>(i - 1)]);
        exp_t defect = checked_sub(w, checked_mul(d.of(y), i));
        if (i == 1 || defect > peak.defect) {
          peak.defect = defect;
          peak.index = i;
        }
      }
      k.value = std::max(k.value, peak.defect);
      k.peaks.push_back(peak);
    }
  }
  for (const auto& [key, value] : edge_bounds)
    k.bounds.push_back(ReturnBound{key.first, key.second, value});
  return k;
}

std::vector<std::string> recheck_letter_bound(const Engine& eng,
                                              const Weights& d, exp_t k,
                                              exp_t lo, exp_t hi) {
  const SemigroupSpec& spec = eng.spec();
  std::vector<std::string> violations;
  for (gen_t x = 0; x < spec.size(); ++x) {
    for (gen_t y = 0; y < spec.size(); ++y) {
      Element acc{x, 1};
      for (exp_t i = 1; i <= hi; ++i) {
        acc = eng.right_mul_gen(acc, y);
        if (i <= lo) continue;
        exp_t defect =
            checked_sub(weight_of(d, acc), checked_mul(d.of(y), i));
        if (defect > k) {
          std::ostringstream msg;
          msg << "defect at step " << i << " of the trajectory of "
              << spec.name(x) << " under " << spec.name(y) << " is "
              << defect << ", above the letter bound " << k;
          violations.push_back(msg.str());
        }
      }
    }
  }
  return violations;
}

Rational density_bound(const Weights& d) {
  Rational sum(0);
  for (exp_t w : d.d) sum = sum + Rational(1, w);
  return sum;
}

exp_t count_by_weight(const Weights& d, exp_t r) {
  exp_t count = 0;
  for (exp_t w : d.d)
    if (r > 0) count = checked_add(count, r / w);
  return count;
}

BallEnumerator::BallEnumerator(const Engine& eng, BallOptions opts)
    : opts_(opts) {
  opts_.threads = std::max(1, opts_.threads);
  for (int i = 0; i < opts_.threads; ++i)
    engines_.push_back(std::make_unique<Engine>(eng.spec(), eng.limits()));
}

const std::vector<Element>& BallEnumerator::next_level() {
  const SemigroupSpec& spec = engines_[0]->spec();
  const gen_t n = spec.size();

  if (depth_ == 0) {
    frontier_.clear();
    for (gen_t g = 0; g < n; ++g) frontier_.push_back(Element{g, 1});
    seen_ = frontier_;
    total_ = n;
    depth_ = 1;
    return frontier_;
  }

  const auto frontier_size = static_cast<std::int64_t>(frontier_.size());
  if (frontier_size > opts_.frontier_cap / n) {
    std::ostringstream msg;
    msg << "expanding a frontier of " << frontier_size << " elements by "
        << n << " letters would pass the cap of " << opts_.frontier_cap;
    throw ResourceExceeded(msg.str());
  }

  // Each worker expands a contiguous chunk through its own engine; the
  // concatenation is sorted afterwards, so chunk boundaries cannot affect
  // the result.
  const int workers = static_cast<int>(
      std::min<std::int64_t>(opts_.threads, frontier_size));
  std::vector<std::vector<Element>> partial(
      static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  const auto expand = [&](int w) {
    const std::size_t lo = frontier_.size() * static_cast<std::size_t>(w) /
                           static_cast<std::size_t>(workers);
    const std::size_t hi =
        frontier_.size() * static_cast<std::size_t>(w + 1) /
        static_cast<std::size_t>(workers);
    const Engine& worker_engine = *engines_[static_cast<std::size_t>(w)];
    auto& out = partial[static_cast<std::size_t>(w)];
    out.reserve((hi - lo) * static_cast<std::size_t>(n));
    try {
      for (std::size_t i = lo; i < hi; ++i)
        for (gen_t y = 0; y < n; ++y)
          out.push_back(worker_engine.right_mul_gen(frontier_[i], y));
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    expand(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(expand, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& failure : failures)
    if (failure) std::rethrow_exception(failure);

  std::vector<Element> products;
  for (auto& chunk : partial)
    products.insert(products.end(), chunk.begin(), chunk.end());
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()),
                 products.end());

  std::vector<Element> fresh;
  std::set_difference(products.begin(), products.end(), seen_.begin(),
                      seen_.end(), std::back_inserter(fresh));
  if (static_cast<std::int64_t>(fresh.size()) > opts_.frontier_cap) {
    std::ostringstream msg;
    msg << "frontier of " << fresh.size() << " elements passes the cap of "
        << opts_.frontier_cap;
    throw ResourceExceeded(msg.str());
  }

  std::vector<Element> merged;
  merged.reserve(seen_.size() + fresh.size());
  std::merge(seen_.begin(), seen_.end(), fresh.begin(), fresh.end(),
             std::back_inserter(merged));
  seen_ = std::move(merged);
  total_ += static_cast<std::int64_t>(fresh.size());
  frontier_ = std::move(fresh);
  ++depth_;
  return frontier_;
}

std::vector<Element> enumerate_ball(const Engine& eng, exp_t m,
                                    BallOptions opts) {
  if (m < 1) throw DocumentError("ball radius must be positive");
  BallEnumerator balls(eng, opts);
  for (exp_t i = 0; i < m; ++i) balls.next_level();
  return balls.seen();
}

GrowthCertificate certify(const Engine& eng, const Weights& d,
                          const LetterBound& k, exp_t m_max,
                          BallOptions opts) {
  if (m_max < 1) throw DocumentError("certificate radius must be positive");
  const SemigroupSpec& spec = eng.spec();
  GrowthCertificate cert;
  cert.d = d;
  cert.k = k;
  cert.density = density_bound(d);
  cert.coefficient = cert.density * Rational(k.value);

  BallEnumerator balls(eng, opts);
  for (exp_t m = 1; m <= m_max; ++m) {
    const std::vector<Element>& level = balls.next_level();
    const exp_t weight_cap = checked_mul(k.value, m);

    // Elements first reached at depth m; anything reached earlier already
    // passed a tighter cap.
    for (const Element& e : level) {
      exp_t w = weight_of(d, e);
      if (w > weight_cap) {
        std::ostringstream msg;
        msg << "ball radius " << m << ": element " << spec.show(e)
            << " has weight " << w << ", above the cap " << weight_cap;
        throw CertificateViolation(msg.str());
      }
    }

    const std::int64_t count = balls.total();
    const exp_t by_weight = count_by_weight(d, weight_cap);
    if (count > by_weight) {
      std::ostringstream msg;
      msg << "ball radius " << m << ": " << count
          << " elements, but only " << by_weight << " have weight at most "
          << weight_cap;
      throw CertificateViolation(msg.str());
    }

    const Rational allowance = cert.coefficient * Rational(m);
    if (Rational(count) > allowance) {
      std::ostringstream msg;
      msg << "ball radius " << m << ": " << count
          << " elements, above the linear allowance " << allowance.str();
      throw CertificateViolation(msg.str());
    }
    cert.rows.push_back(BallRow{m, count, allowance.ceil()});
  }
  cert.verdict = true;
  return cert;
}

}  // namespace monounion
