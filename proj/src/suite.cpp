#include "dtriples/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <set>

#include "dtriples/curves.hpp"
#include "dtriples/error.hpp"
#include "dtriples/ff.hpp"
#include "dtriples/modforms.hpp"
#include "dtriples/moments.hpp"
#include "dtriples/params.hpp"
#include "dtriples/triples.hpp"
#include "dtriples/varieties.hpp"

namespace dtriples {

namespace {

using Inputs = std::map<std::string, std::string>;

std::string str(long long v) { return std::to_string(v); }

std::vector<std::uint32_t> odd_primes(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 3); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Sorted union of a fixed field list and the configured extension sizes.
std::vector<std::uint32_t> field_sizes(std::vector<std::uint32_t> base, const SuiteConfig& config, bool odd_only) {
  for (auto q : config.qlist) {
    if (!odd_only || q % 2 == 1) base.push_back(q);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

VerifyReport from_pair(const std::string& task, const CountPair& c) {
  return make_report(task, c.inputs, str(c.formula), str(c.brute));
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

VerifyReport tolerance_report(std::string task, Inputs inputs, double target, double estimate, double tol) {
  inputs["tolerance"] = fixed(tol);
  VerifyReport r = make_report(std::move(task), std::move(inputs), fixed(target), fixed(estimate));
  r.match = std::fabs(estimate - target) <= tol;
  return r;
}

// Distinct, reproducible sampler streams per task.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t task) { return seed * 0x9E3779B97F4A7C15ull + task; }

}  // namespace

std::vector<VerifyReport> verify_xk(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto p : odd_primes(3, config.count_pmax)) {
    const FieldCtx F = prime_field(p);
    long long fibration = 0;
    for (std::uint32_t k = 1; k < p; ++k) {
      const FieldElem kk = F.from_int(k);
      const long long brute = count_Xk_brute(F, kk);
      fibration += brute;
      out.push_back(make_report("varieties.Xk", {{"p", str(p)}, {"k", str(k)}}, count_Xk_formula(F, kk), brute));
    }
    out.push_back(make_report("varieties.fibration", {{"p", str(p)}}, count_X_minus_X0_formula(F), fibration));

    const SpecialLoci L = special_loci(F);
    out.push_back(from_pair("varieties.N1", L.n1));
    out.push_back(from_pair("varieties.N2", L.n2));
    out.push_back(from_pair("varieties.N3", L.n3));
    out.push_back(from_pair("varieties.N4", L.n4));
    if ((2 * L.n1.brute + L.n2.brute) % 48 == 0) {
      out.push_back(make_report("varieties.loci_to_N", {{"p", str(p)}}, N_formula(p), (2 * L.n1.brute + L.n2.brute) / 48));
    } else {
      out.push_back(make_report("varieties.loci_to_N", {{"p", str(p)}}, str(N_formula(p)),
                                str(2 * L.n1.brute + L.n2.brute) + "/48"));
    }
  }
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const FieldCtx F = prime_field(p);
    for (std::uint32_t k = 1; k < p; ++k) {
      for (std::uint32_t z = 0; z < p; ++z) {
        const CountPair c = fiber_compare(F, F.from_int(k), F.from_int(z));
        out.push_back(make_report("varieties.fiber", {{"p", str(p)}, {"k", str(k)}, {"z", str(z)}}, str(c.formula),
                                  str(c.brute)));
      }
    }
  }
  return out;
}

std::vector<VerifyReport> verify_xbar(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto q : field_sizes({2, 3, 4, 5, 7, 8, 9, 11, 13}, config, false)) {
    const FieldCtx F = field_of_order(q);
    const Inputs in{{"q", str(q)}};
    out.push_back(make_report("varieties.Xbar", in, count_Xbar_formula(F), count_Xbar_brute(F)));
    out.push_back(make_report("varieties.X", in, count_X_formula(F), count_X_brute(F)));
    out.push_back(make_report("varieties.X_minus_X0", in, count_X_minus_X0_formula(F), count_X_minus_X0_brute(F)));
  }
  return out;
}

std::vector<VerifyReport> verify_triples(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto q : field_sizes({3, 5, 7, 9, 11, 13, 17, 19, 23}, config, true)) {
    const FieldCtx F = field_of_order(q);
    out.push_back(make_report("triples.N", {{"q", str(q)}}, N_formula(q), count_triples(F)));
  }
  for (std::uint32_t q : {2u, 4u, 8u}) {
    out.push_back(make_report("triples.N", {{"q", str(q)}}, N_formula(q), count_triples(field_of_order(q))));
  }
  // Each triple with its canonical witnesses gives 6 orderings, all of which
  // must survive the round trip through X.
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const FieldCtx F = prime_field(p);
    long long expected = 0;
    long long survived = 0;
    for (const auto& T : enumerate_triples(F)) {
      const FieldElem e[3] = {T.a, T.b, T.c};
      int perm[3] = {0, 1, 2};
      do {
        const FieldElem a = e[perm[0]], b = e[perm[1]], c = e[perm[2]];
        const auto w = is_triple(F, a, b, c);
        const OrderedTriple O{a, b, c, (*w)[0], (*w)[1], (*w)[2]};
        ++expected;
        try {
          const CorrespondencePoint P = triple_to_point(F, O);
          if (on_X(F, P) && point_to_triple(F, P) == O) ++survived;
        } catch (const Error&) {
        }
      } while (std::next_permutation(perm, perm + 3));
    }
    out.push_back(make_report("triples.correspondence", {{"p", str(p)}}, expected, survived));
  }
  return out;
}

std::vector<VerifyReport> verify_npk(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto p : odd_primes(5, config.count_pmax)) {
    const FieldCtx F = prime_field(p);
    std::map<std::uint32_t, long long> by_product;
    for (const auto& T : enumerate_triples(F)) ++by_product[T.product.code];
    long long total = 0;
    for (std::uint32_t k = 1; k < p; ++k) {
      const long long brute = by_product[k];
      total += brute;
      out.push_back(
          make_report("triples.Npk96", {{"p", str(p)}, {"k", str(k)}}, N_pk_formula96(F, F.from_int(k)), 96 * brute));
    }
    out.push_back(make_report("triples.Npk_partition", {{"p", str(p)}}, count_triples(F), total));
  }
  return out;
}

std::vector<VerifyReport> verify_moments(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto p : odd_primes(3, config.pmax)) {
    for (Family fam : {Family::E, Family::F, Family::H}) {
      if (fam == Family::H && p <= 3) continue;
      const MomentRecord r = second_moment(p, fam);
      out.push_back(make_report("moments.M2", {{"family", std::string(family_name(fam))}, {"p", str(p)}},
                                r.formula_M2, r.M2));
    }
    out.push_back(from_pair("moments.sum_a_sq", sum_a_sq(p)));
    out.push_back(from_pair("moments.sum_b_sq", sum_b_sq(p)));
    for (auto& r : twisted_sum(p)) out.push_back(std::move(r));
    out.push_back(prop_lem1_check(p));
  }
  return out;
}

std::vector<VerifyReport> verify_bias(const SuiteConfig& config) {
  const auto X = static_cast<std::uint32_t>(config.N);
  const Inputs in{{"X", str(X)}};
  std::vector<VerifyReport> out;
  const BiasEstimate e = bias_mu(Family::E, X);
  const BiasEstimate f = bias_mu(Family::F, X);
  const BiasEstimate h = bias_mu(Family::H, X);
  auto with = [&](const char* fam) {
    Inputs i = in;
    i["family"] = fam;
    return i;
  };
  out.push_back(tolerance_report("moments.bias_mu2", with("E"), -3.0, e.mu2, 0.1));
  out.push_back(tolerance_report("moments.bias_mu2", with("F"), -3.0, f.mu2, 0.1));
  out.push_back(tolerance_report("moments.bias_mu2", with("H"), -5.0, h.mu2, 0.2));
  out.push_back(tolerance_report("moments.bias_mu3", with("E"), 0.0, e.mu3, 0.1));
  return out;
}

std::vector<VerifyReport> verify_params(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  const auto with_seed = [&](VerifyReport r) {
    r.seed = config.seed;
    out.push_back(std::move(r));
  };
  const auto inputs = [&](std::size_t rejected) {
    return Inputs{{"samples", str(config.samples)}, {"rejected", str(rejected)}};
  };

  // Two-parameter-chart triples, and the points of Xbar they give for psi . phi.
  {
    RatSampler S(stream_seed(config.seed, 1));
    long long valid = 0, squares = 0, roundtrips = 0, chart_points = 0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const auto t = S.next_n(3);
      RatTriple T;
      try {
        T = triple_from_t(t[0], t[1], t[2]);
      } catch (const Error& e) {
        S.reject(std::string("triple_from_t: ") + e.what());
        continue;
      }
      ++valid;
      const std::vector<Rat> a(T.a.begin(), T.a.end());
      if (!pairwise_square_condition(a)) continue;
      ++squares;
      const Rat r = *rat_sqrt(a[0] * a[1] + 1);
      const Rat s = *rat_sqrt(a[0] * a[2] + 1);
      const Rat u = *rat_sqrt(a[1] * a[2] + 1);
      const ProjPoint P({r, s, u, a[0] * a[1] * a[2], Rat(1)});
      try {
        const bool same = psi_map(phi_map(P)) == P;
        ++chart_points;
        roundtrips += same;
      } catch (const Error& e) {
        S.reject(std::string("psi.phi: ") + e.what());
      }
    }
    with_seed(make_report("params.intro_squares", inputs(config.samples - valid), valid, squares));
    with_seed(make_report("params.psi_phi", inputs(S.rejections().size()), chart_points, roundtrips));
  }

  // phi . psi on P^3, and psi images on Xbar.
  {
    RatSampler S(stream_seed(config.seed, 2));
    long long valid = 0, on = 0, roundtrips = 0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const ProjPoint Q = [&] {
        for (;;) {
          try {
            return ProjPoint(S.next_n(4));
          } catch (const Error&) {
            S.reject("zero point of P^3");
          }
        }
      }();
      try {
        const ProjPoint P = psi_map(Q);
        const ProjPoint back = phi_map(P);
        ++valid;
        on += on_Xbar(P);
        roundtrips += back == Q;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BaseLocus) throw;
        S.reject(std::string("phi.psi: ") + e.what());
      }
    }
    with_seed(make_report("params.psi_on_Xbar", inputs(S.rejections().size()), valid, on));
    with_seed(make_report("params.phi_psi", inputs(S.rejections().size()), valid, roundtrips));
  }

  // Circular m-tuples and, for m = 3, parameter recovery.
  for (std::size_t m = 3; m <= 6; ++m) {
    RatSampler S(stream_seed(config.seed, 10 + m));
    long long valid = 0, identity = 0, recovered = 0, recoverable = 0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const auto T = S.next_n(m);
      std::vector<Rat> a, G;
      try {
        a = circular_tuple(T);
        G = circular_G_tuple(T);
      } catch (const Error& e) {
        S.reject(std::string("circular: ") + e.what());
        continue;
      }
      ++valid;
      bool ok = circular_square_condition(a);
      for (std::size_t j = 0; j < m; ++j) ok = ok && a[j] * a[(j + 1) % m] + 1 == G[j] * G[j];
      identity += ok;
      if (m == 3 && std::none_of(a.begin(), a.end(), [](const Rat& v) { return v == 0; })) {
        ++recoverable;
        recovered += !recover_t(a).empty();
      }
    }
    Inputs in = inputs(S.rejections().size());
    in["m"] = str(static_cast<long long>(m));
    with_seed(make_report("params.circular", in, valid, identity));
    if (m == 3) with_seed(make_report("params.recover_t", inputs(S.rejections().size()), recoverable, recovered));
  }

  // Delta identity and L = psi . mu.
  {
    RatSampler S(stream_seed(config.seed, 3));
    long long valid = 0, delta_ok = 0, mu_ok = 0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const auto t = S.next_n(3);
      try {
        const auto reports = mu_and_delta_check(t[0], t[1], t[2]);
        ++valid;
        delta_ok += reports[0].match;
        mu_ok += reports[1].match;
      } catch (const Error& e) {
        S.reject(std::string("mu: ") + e.what());
      }
    }
    with_seed(make_report("params.delta", inputs(S.rejections().size()), valid, delta_ok));
    with_seed(make_report("params.L_psi_mu", inputs(S.rejections().size()), valid, mu_ok));
  }

  // Fixed worked values.
  const ProjPoint fermat({Rat(2), Rat(3), Rat(5), Rat(24), Rat(1)});
  out.push_back(make_report("params.phi_example", {{"point", fermat.primitive_string()}},
                            std::string("[3:5:8:1]"), phi_map(fermat).primitive_string()));
  const ProjPoint image({Rat(3), Rat(5), Rat(8), Rat(1)});
  out.push_back(make_report("params.psi_example", {{"point", image.primitive_string()}},
                            std::string("[2:3:5:24:1]"), psi_map(image).primitive_string()));
  return out;
}

std::vector<VerifyReport> verify_modform(const SuiteConfig& config) {
  const QSeries& f = newform_expansion(config.N);
  std::string listed;
  for (std::size_t n : {1, 3, 5, 7, 9, 11}) {
    if (!listed.empty()) listed += ',';
    listed += f[n].get_str();
  }
  std::vector<VerifyReport> out;
  out.push_back(make_report("modform.coefficients", {{"n", "1,3,5,7,9,11"}}, std::string("1,-4,-2,24,-11,-44"), listed));
  out.push_back(hecke_check(config.N));
  out.push_back(deligne_check(config.N));
  long long even = 0, zero = 0;
  for (std::size_t n = 2; n <= config.N; n += 2) {
    ++even;
    zero += f[n] == 0;
  }
  out.push_back(make_report("modform.even_vanish", {{"order", str(static_cast<long long>(config.N))}}, even, zero));
  return out;
}

std::vector<VerifyReport> verify_charsum(const SuiteConfig&) {
  std::vector<VerifyReport> out;
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const FieldCtx F = field_of_order(q);
    long long total = 0, agree = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
          ++total;
          const FieldElem A{a}, B{b}, C{c};
          agree += char_sum_exhaustive(F, A, B, C) == char_sum_formula(F, A, B, C);
        }
      }
    }
    out.push_back(make_report("ff.charsum", {{"q", str(q)}}, total, agree));
  }
  return out;
}

std::vector<VerifyReport> verify_curves(const SuiteConfig& config) {
  std::vector<VerifyReport> out;
  for (auto p : odd_primes(3, config.pmax)) {
    const long long t = lambda_trace(p);
    out.push_back(make_report("curves.lambda_sq", {{"p", str(p)}}, lambda_sq(p), t * t));
  }
  // The node/cusp convention agrees with q + 1 - #C on every singular member.
  for (auto p : odd_primes(3, config.count_pmax)) {
    const FieldCtx F = prime_field(p);
    for (Family fam : {Family::E, Family::F, Family::G, Family::H, Family::HTwist}) {
      long long singular = 0, agree = 0;
      for (std::uint32_t k = 0; k < p; ++k) {
        const WeierstrassCurve C = make_family_curve(fam, F, F.from_int(k));
        if (!is_singular(C)) continue;
        ++singular;
        agree += trace_with_convention(C).a == static_cast<long long>(p) + 1 - count_points(C);
      }
      out.push_back(make_report("curves.convention", {{"family", std::string(family_name(fam))}, {"p", str(p)}},
                                singular, agree));
    }
  }
  return out;
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> names{"xk",     "xbar",   "triples", "npk",     "moments",
                                              "bias",   "params", "modform", "charsum", "curves"};
  return names;
}

std::vector<VerifyReport> run_suite(const SuiteConfig& config, const std::vector<std::string>& groups) {
  using Runner = std::function<std::vector<VerifyReport>(const SuiteConfig&)>;
  static const std::map<std::string, Runner> runners{
      {"xk", verify_xk},           {"xbar", verify_xbar},       {"triples", verify_triples},
      {"npk", verify_npk},         {"moments", verify_moments}, {"bias", verify_bias},
      {"params", verify_params},   {"modform", verify_modform}, {"charsum", verify_charsum},
      {"curves", verify_curves},
  };

  std::set<std::string> selected;
  for (const auto& g : groups) {
    if (g == "all") {
      selected.insert(suite_groups().begin(), suite_groups().end());
    } else if (runners.count(g)) {
      selected.insert(g);
    } else {
      throw Error(ErrorKind::Usage, "unknown verification group '" + g + "'");
    }
  }

  // Fill the shared series cache before fanning out.
  if (selected.count("moments") || selected.count("bias") || selected.count("modform")) newform_expansion(config.N);

  std::vector<std::future<std::vector<VerifyReport>>> jobs;
  for (const auto& name : selected) {
    const Runner& run = runners.at(name);
    jobs.push_back(std::async(std::launch::async, [&config, &run] {
      const auto start = std::chrono::steady_clock::now();
      auto reports = run(config);
      if (config.timings) {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        for (auto& r : reports) r.runtime_ms = ms.count();
      }
      return reports;
    }));
  }
  std::vector<VerifyReport> all;
  for (auto& j : jobs) {
    auto part = j.get();
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  sort_reports(all);
  return all;
}

}  // namespace dtriples
