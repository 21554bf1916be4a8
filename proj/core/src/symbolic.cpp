// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/symbolic.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pi2 {

std::vector<Profile> enumerate_profiles(int free_count, int bound_count) {
  if (free_count < 0 || bound_count < 0) throw std::invalid_argument("negative variable count");
  std::vector<Profile> out;
  const auto f = static_cast<std::size_t>(free_count);
  for (int blocks = 2; blocks <= free_count + 2; ++blocks) {
    std::vector<int> assign(f, 0);
    while (true) {
      std::vector<int> used(static_cast<std::size_t>(blocks), 0);
      for (int b : assign) used[static_cast<std::size_t>(b)] = 1;
      const bool onto_middle = std::all_of(used.begin() + 1, used.end() - 1, [](int u) { return u != 0; });
      if (onto_middle) {
        std::vector<int> caps(static_cast<std::size_t>(blocks - 1), 0);
        while (true) {
          out.push_back(Profile{blocks, assign, caps});
          std::size_t i = caps.size();
          while (i > 0 && ++caps[i - 1] > bound_count) caps[--i] = 0;
          if (i == 0) break;
        }
      }
      std::size_t i = f;
      while (i > 0 && ++assign[i - 1] == blocks) assign[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

namespace {

std::vector<Element> block_positions(const Profile& p) {
  std::vector<Element> pos(static_cast<std::size_t>(p.block_count), 0);
  for (std::size_t i = 1; i < pos.size(); ++i) pos[i] = pos[i - 1] + 1 + p.caps[i - 1];
  return pos;
}

int realized_size(const Profile& p) {
  return p.block_count + std::accumulate(p.caps.begin(), p.caps.end(), 0);
}

}  // namespace

Realization realize_profile(const Profile& p, std::span<const std::string> names) {
  if (names.size() != p.block_of.size()) {
    throw std::invalid_argument("profile has " + std::to_string(p.block_of.size()) + " variables, got " +
                                std::to_string(names.size()) + " names");
  }
  const auto pos = block_positions(p);
  Realization r{make_chain(realized_size(p)), {}};
  for (std::size_t i = 0; i < names.size(); ++i) {
    r.valuation[names[i]] = pos[static_cast<std::size_t>(p.block_of[i])];
  }
  return r;
}

bool is_feasible(const Profile& p, int bound_count, int n) {
  int required = p.block_count;
  bool has_full = false;
  for (int c : p.caps) {
    required += c;
    has_full = has_full || c == bound_count;
  }
  return has_full ? required <= n : required == n;
}

int spectrum_threshold(int free_count, int bound_count) {
  return (free_count + 2) + (free_count + 1) * bound_count;
}

namespace {

// A profile survives the limit n → ∞ iff it stays feasible for all large n.
bool eventually_feasible(const Profile& p, int bound_count) {
  return bound_count == 0 || std::any_of(p.caps.begin(), p.caps.end(), [&](int c) { return c == bound_count; });
}

bool dense(const Profile& p, int bound_count) {
  return std::all_of(p.caps.begin(), p.caps.end(), [&](int c) { return c == bound_count; });
}

class Engine {
 public:
  Engine(const Pi2Rule& rule, ExecutionOptions options)
      : options_(options), free_(rule.free_variables()), bound_count_(static_cast<int>(rule.bound().size())) {
    order_ = free_;
    order_.insert(order_.end(), rule.bound().begin(), rule.bound().end());
    for (const auto& p : rule.premises()) premises_.emplace_back(p, order_);
    conclusion_.emplace(rule.conclusion(), order_);
    profiles_ = enumerate_profiles(static_cast<int>(free_.size()), bound_count_);
  }

  int free_count() const { return static_cast<int>(free_.size()); }
  int bound_count() const { return bound_count_; }
  const std::vector<Profile>& profiles() const { return profiles_; }

  // Inner check: if every placement of the bound variables makes all
  // premises top, the conclusion is top.
  bool passes(const Profile& p) const {
    const auto pos = block_positions(p);
    const FiniteGodelAlgebra chain = make_chain(realized_size(p));
    std::vector<Element> values(order_.size(), 0);
    for (std::size_t i = 0; i < free_.size(); ++i) values[i] = pos[static_cast<std::size_t>(p.block_of[i])];
    if (conclusion_->eval(chain, values) == chain.top()) return true;
    const auto n = static_cast<Element>(chain.size());
    while (true) {
      for (const auto& prem : premises_) {
        if (prem.eval(chain, values) != chain.top()) return true;
      }
      std::size_t i = values.size();
      while (i > free_.size() && ++values[i - 1] == n) values[--i] = 0;
      if (i == free_.size()) return false;
    }
  }

  // Conjunction of passes() over the profiles selected by keep.
  bool all_pass(const std::function<bool(const Profile&)>& keep) const {
    const std::size_t total = profiles_.size();
    const unsigned threads = std::max(1U, std::min<unsigned>(options_.threads, static_cast<unsigned>(total)));
    auto run = [&](std::size_t lo, std::size_t hi, const std::atomic<bool>& stop) {
      for (std::size_t i = lo; i < hi && !stop.load(std::memory_order_relaxed); ++i) {
        if (keep(profiles_[i]) && !passes(profiles_[i])) return false;
      }
      return true;
    };
    std::atomic<bool> failed{false};
    if (threads <= 1) return run(0, total, failed);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (total + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        workers.emplace_back([&, lo, hi] {
          if (!run(lo, hi, failed)) failed = true;
        });
      }
    }
    return !failed;
  }

  // passes() for every profile, in profile order.
  std::vector<bool> verdicts() const {
    std::vector<char> out(profiles_.size(), 1);
    const std::size_t total = profiles_.size();
    const unsigned threads = std::max(1U, std::min<unsigned>(options_.threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    if (threads <= 1) {
      for (std::size_t i = 0; i < total; ++i) out[i] = passes(profiles_[i]);
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t i = t; i < total; i += threads) out[i] = passes(profiles_[i]);
        });
      }
    }
    return {out.begin(), out.end()};
  }

 private:
  ExecutionOptions options_;
  std::vector<std::string> free_;
  int bound_count_;
  std::vector<std::string> order_;
  std::vector<TermProgram> premises_;
  std::optional<TermProgram> conclusion_;
  std::vector<Profile> profiles_;
};

}  // namespace

bool rule_holds_on_chain_symbolic(const Pi2Rule& rule, int n, const ExecutionOptions& options) {
  if (n < 2) throw std::invalid_argument("chain size must be at least 2, got " + std::to_string(n));
  const Engine engine(rule, options);
  const int b = engine.bound_count();
  return engine.all_pass([&](const Profile& p) { return is_feasible(p, b, n); });
}

bool Spectrum::valid_at(int n) const {
  if (n < 2) throw std::invalid_argument("chain size must be at least 2, got " + std::to_string(n));
  if (n > threshold) return tail;
  return explicit_values[static_cast<std::size_t>(n - 2)];
}

std::vector<int> Spectrum::valid_sizes() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < explicit_values.size(); ++i) {
    if (explicit_values[i]) out.push_back(static_cast<int>(i) + 2);
  }
  return out;
}

bool Spectrum::all_valid() const {
  return tail && std::all_of(explicit_values.begin(), explicit_values.end(), [](bool v) { return v; });
}

Spectrum chain_spectrum(const Pi2Rule& rule, const ExecutionOptions& options) {
  const Engine engine(rule, options);
  const int b = engine.bound_count();
  const auto& profiles = engine.profiles();
  const std::vector<bool> ok = engine.verdicts();

  Spectrum s;
  s.threshold = spectrum_threshold(engine.free_count(), b);
  for (int n = 2; n <= s.threshold; ++n) {
    bool valid = true;
    for (std::size_t i = 0; i < profiles.size() && valid; ++i) {
      if (!ok[i] && is_feasible(profiles[i], b, n)) valid = false;
    }
    s.explicit_values.push_back(valid);
  }
  s.tail = true;
  for (std::size_t i = 0; i < profiles.size() && s.tail; ++i) {
    if (!ok[i] && eventually_feasible(profiles[i], b)) s.tail = false;
  }
  // At the threshold exactly the eventually feasible profiles are feasible.
  if (s.explicit_values.back() != s.tail) {
    throw std::logic_error("spectrum is not constant from its threshold on");
  }
  return s;
}

bool q_valid(const Pi2Rule& rule, const ExecutionOptions& options) {
  const Engine engine(rule, options);
  const int b = engine.bound_count();
  return engine.all_pass([&](const Profile& p) { return dense(p, b); });
}

}  // namespace pi2
