// SPDX-License-Identifier: MIT
#include "ghzec/oracle.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "ghzec/rng.hpp"

namespace ghzec {

State analytic_encoded_state(const State& message, const CodeLayout& layout) {
  const int k = layout.k();
  if (message.n_qubits() != k) {
    throw DimensionError("message of " + std::to_string(message.n_qubits()) +
                         " qubits does not fit a k=" + std::to_string(k) +
                         " layout");
  }
  const int blocks = layout.code_blocks();
  const int n = layout.code_qubits();
  const std::uint64_t word_mask = (1ull << k) - 1;
  std::vector<cdouble> amps(1ull << n, 0.0);
  const double scale = std::pow(0.5, 0.5 * blocks);
  for (std::uint64_t i = 0; i <= word_mask; ++i) {
    const cdouble weight = message.amplitudes()[i];
    if (weight == cdouble(0.0)) continue;
    const std::uint64_t u = i & ~1ull;
    const std::uint64_t u_bar = (~u) & word_mask;
    const bool negative = (i & 1ull) != 0;
    for (std::uint64_t choice = 0; choice < (1ull << blocks); ++choice) {
      std::uint64_t idx = 0;
      for (int d = 0; d < blocks; ++d) {
        const std::uint64_t w = ((choice >> d) & 1ull) ? u_bar : u;
        idx |= w << (k * (blocks - 1 - d));
      }
      const bool flip = negative && (std::popcount(choice) % 2 == 1);
      amps[idx] += (flip ? -weight : weight) * scale;
    }
  }
  return State::from_amplitudes(n, std::move(amps));
}

EncodingTableResult verify_encoding_table(int k) {
  const CodeLayout layout(k);
  EncodingTableResult result;
  result.k = k;
  for (std::uint64_t i = 0; i < (1ull << k); ++i) {
    const State msg = State::basis(k, i);
    const State via_gates = encode(msg, layout);
    const State closed_form = analytic_encoded_state(msg, layout);
    double worst = 0.0;
    for (std::uint64_t idx = 0; idx < via_gates.dim(); ++idx) {
      worst = std::max(worst, std::abs(via_gates.amplitudes()[idx] -
                                       closed_form.amplitudes()[idx]));
    }
    result.per_word_deviation.push_back(worst);
    result.max_abs_deviation = std::max(result.max_abs_deviation, worst);
  }
  result.pass = result.max_abs_deviation <= kAmpTolerance;
  return result;
}

std::string pattern_label(std::span<const ErasureFlag> flags) {
  if (flags.empty()) return "none";
  std::string out;
  for (const ErasureFlag& f : flags) {
    if (!out.empty()) out += ',';
    out += std::to_string(f.block);
    out += ':';
    out += std::to_string(f.position);
  }
  return out;
}

std::vector<ErasurePattern> enumerate_patterns(const CodeLayout& layout) {
  std::vector<ErasurePattern> out;
  out.push_back({});
  const int nb = layout.t() + 1;
  for (int j = 1; j <= layout.t(); ++j) {
    std::vector<int> comb(j);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::vector<int> pos(j, 1);
      while (true) {
        ErasurePattern p;
        for (int x = 0; x < j; ++x) p.flags.push_back({comb[x], pos[x]});
        out.push_back(std::move(p));
        int x = j - 1;
        while (x >= 0 && pos[x] == layout.k()) {
          pos[x] = 1;
          --x;
        }
        if (x < 0) break;
        ++pos[x];
      }
      int x = j - 1;
      while (x >= 0 && comb[x] == nb - j + x) --x;
      if (x < 0) break;
      ++comb[x];
      for (int y = x + 1; y < j; ++y) comb[y] = comb[y - 1] + 1;
    }
  }
  return out;
}

double pipeline_fidelity(const State& message, const CodeLayout& layout,
                         std::span<const ErasureEvent> events) {
  const State corrupted = apply_erasure(encode(message, layout), layout,
                                        events);
  const State out =
      restore(corrupted, layout, flags_from_events(layout, events));
  std::vector<int> keep(layout.k());
  std::iota(keep.begin(), keep.end(), layout.code_qubits());
  return subsystem_fidelity(out, keep, message);
}

Report sweep_all_patterns(const SweepOptions& options) {
  const CodeLayout layout(options.k);
  if (options.trials < 1) {
    throw Error("sweep needs at least one trial per case");
  }
  if (options.models.empty()) {
    throw Error("sweep needs at least one corruption model");
  }
  const std::vector<ErasurePattern> patterns = enumerate_patterns(layout);

  struct CaseDesc {
    std::size_t pattern;
    std::size_t model;
    std::uint64_t seed;
  };
  std::vector<CaseDesc> descs;
  descs.reserve(patterns.size() * options.models.size() * options.trials);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (std::size_t m = 0; m < options.models.size(); ++m) {
      for (int trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t seed = mix_seed(
            mix_seed(mix_seed(options.seed, p + 1), m + 1), trial + 1);
        descs.push_back({p, m, seed});
      }
    }
  }

  Report report;
  report.cases.resize(descs.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::exception_ptr first_error;

  auto worker = [&]() {
    while (true) {
      {
        std::lock_guard<std::mutex> guard(error_lock);
        if (first_error) return;
      }
      const std::size_t idx = next.fetch_add(1);
      if (idx >= descs.size()) return;
      const CaseDesc& d = descs[idx];
      try {
        const auto start = std::chrono::steady_clock::now();
        const State psi = random_state(options.k, d.seed);
        std::vector<ErasureEvent> events;
        for (const ErasureFlag& f : patterns[d.pattern].flags) {
          events.push_back({f.block, f.position, options.models[d.model]});
        }
        const double f = pipeline_fidelity(psi, layout, events);
        const double ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        report.cases[idx] =
            CaseRecord{pattern_label(patterns[d.pattern].flags),
                       options.models[d.model].name(), d.seed, f, ms};
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_lock);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads,
                               static_cast<unsigned>(descs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::string model_names;
  for (const CorruptionModel& m : options.models) {
    if (!model_names.empty()) model_names += ',';
    model_names += m.name();
  }
  report.config["scenario"] = "sweep";
  report.config["k"] = options.k;
  report.config["model"] = model_names;
  report.config["trials"] = options.trials;
  report.config["seed"] = options.seed;
  report.config["threads"] = options.threads;
  report.finalize();
  return report;
}

}  // namespace ghzec
