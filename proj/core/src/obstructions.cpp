#include "kodaira/obstructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kodaira/errors.hpp"

namespace kodaira {
namespace {

std::string join_images(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::passed:
      return "passed";
    case Status::excluded:
      return "excluded";
    case Status::conditional:
      return "conditional";
    default:
      return "inconclusive";
  }
}

ChernInvariants chern_invariants(std::size_t fiber_genus,
                                 std::size_t base_genus, std::int64_t chi) {
  if (fiber_genus < 2 || base_genus < 2) {
    throw InvalidSpec("characteristic numbers need fiber and base genus >= 2");
  }
  ChernInvariants out;
  out.chi = chi;
  out.e = 4 * static_cast<std::int64_t>(base_genus - 1) *
          static_cast<std::int64_t>(fiber_genus - 1);
  out.sigma = 4 * chi - out.e;
  out.k2 = 12 * chi - out.e;
  out.slope = mpq_class(out.k2, out.e);
  out.slope.canonicalize();
  return out;
}

std::vector<std::int64_t> admissible_chi(std::size_t fiber_genus,
                                         std::size_t base_genus) {
  if (fiber_genus < 2 || base_genus < 2) return {};
  const std::int64_t p = static_cast<std::int64_t>(base_genus - 1) *
                         static_cast<std::int64_t>(fiber_genus - 1);
  std::vector<std::int64_t> out;
  // P < chi and 3 chi < 4P, i.e. chi in [P + 1, floor((4P - 1) / 3)].
  for (std::int64_t chi = p + 1; 3 * chi <= 4 * p - 1; ++chi) {
    out.push_back(chi);
  }
  return out;
}

ObstructionOutcome check_genus_bounds(std::size_t fiber_genus,
                                      std::size_t base_genus) {
  ObstructionOutcome out;
  out.name = "genus-bounds";
  std::ostringstream detail;
  if (fiber_genus < 3 || base_genus < 2) {
    out.status = Status::excluded;
    detail << "need fiber genus >= 3 and base genus >= 2, got fiber genus "
           << fiber_genus << " and base genus " << base_genus;
  } else {
    out.status = Status::passed;
    detail << "fiber genus " << fiber_genus << " >= 3 and base genus "
           << base_genus << " >= 2";
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_rank_parity(const RankInterval& interval,
                                     std::size_t base_genus) {
  ObstructionOutcome out;
  out.name = "rank-parity";
  std::ostringstream detail;
  switch (interval.parity) {
    case RankParity::even:
      out.status = Status::passed;
      if (interval.lo == interval.hi) {
        detail << "coinvariant rank " << interval.lo << " is even, so b1 = "
               << 2 * base_genus + interval.lo << " is even";
      } else {
        detail << "coinvariant rank is even on [" << interval.lo << ", "
               << interval.hi << "], so b1 = 2b + rank is even";
      }
      break;
    case RankParity::odd:
      out.status = Status::excluded;
      if (interval.lo == interval.hi) {
        detail << "coinvariant rank " << interval.lo << " is odd, so b1 = "
               << 2 * base_genus + interval.lo
               << " is odd; the total space cannot be Kaehler";
      } else {
        detail << "coinvariant rank is odd on [" << interval.lo << ", "
               << interval.hi
               << "], so b1 = 2b + rank is odd; the total space cannot be "
                  "Kaehler";
      }
      break;
    default:
      out.status = Status::inconclusive;
      detail << "declared rank interval [" << interval.lo << ", "
             << interval.hi << "] admits both parities";
      break;
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_torelli_product(const BundleSpec& bundle) {
  ObstructionOutcome out;
  out.name = "torelli-product";
  const std::size_t g = bundle.fiber_genus();
  std::ostringstream detail;
  if (bundle.is_declared()) {
    const DeclaredBlock& d = bundle.declared();
    if (d.coinv_rank_lo == 2 * g && d.coinv_rank_hi == 2 * g) {
      out.status = Status::excluded;
      detail << "declared coinvariant rank equals 2g = " << 2 * g
             << ": the monodromy is homologically trivial, q_f = g = " << g
             << ", a homology product";
    } else {
      out.status = Status::inconclusive;
      detail << "declared interval [" << d.coinv_rank_lo << ", "
             << d.coinv_rank_hi << "] does not pin the rank to 2g = " << 2 * g;
    }
    out.detail = detail.str();
    return out;
  }
  const std::vector<IntMatrix>& images = bundle.is_explicit()
                                             ? bundle.rep().images
                                             : bundle.generating_set().images;
  const bool trivial = std::all_of(images.begin(), images.end(),
                                   [](const IntMatrix& m) { return m.is_identity(); });
  if (trivial) {
    out.status = Status::excluded;
    detail << "every monodromy image is the identity: coinvariant rank 2g = "
           << 2 * g << ", q_f = g = " << g << ", a homology product";
  } else {
    out.status = Status::passed;
    detail << "the monodromy acts nontrivially on fiber homology";
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_xiao(std::size_t fiber_genus, std::size_t s) {
  ObstructionOutcome out;
  out.name = "xiao-bound";
  const std::size_t bound = 1 + 6 * s;
  std::ostringstream detail;
  if (fiber_genus > bound) {
    out.status = Status::excluded;
    detail << "g = " << fiber_genus << " > " << bound
           << " = 1 + 6s (s = " << s << ")";
  } else {
    out.status = Status::passed;
    detail << "g = " << fiber_genus << " <= " << bound
           << " = 1 + 6s (s = " << s << ")";
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_xiao(std::size_t fiber_genus,
                              const CoinvariantsReport& report) {
  if (!report.s) {
    throw ParityUndefined(
        "s = g - rank/2 is undefined: the coinvariant rank " +
        std::to_string(report.rank) + " is odd");
  }
  return check_xiao(fiber_genus, *report.s);
}

ObstructionOutcome check_xiao_interval(std::size_t fiber_genus,
                                       std::size_t s_lo, std::size_t s_hi) {
  if (s_lo > s_hi) throw InvalidSpec("empty s interval");
  if (s_lo == s_hi) return check_xiao(fiber_genus, s_lo);
  ObstructionOutcome out;
  out.name = "xiao-bound";
  std::ostringstream detail;
  if (fiber_genus > 1 + 6 * s_hi) {
    out.status = Status::excluded;
    detail << "g = " << fiber_genus << " > " << 1 + 6 * s_hi
           << " = 1 + 6s for every admissible s (s in [" << s_lo << ", "
           << s_hi << "])";
  } else if (fiber_genus <= 1 + 6 * s_lo) {
    out.status = Status::passed;
    detail << "g = " << fiber_genus << " <= " << 1 + 6 * s_lo
           << " = 1 + 6s for every admissible s (s in [" << s_lo << ", "
           << s_hi << "])";
  } else {
    out.status = Status::inconclusive;
    detail << "g = " << fiber_genus
           << " violates 1 + 6s for some but not all admissible s (s in ["
           << s_lo << ", " << s_hi << "])";
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_chi_window(std::size_t fiber_genus,
                                    std::size_t base_genus,
                                    std::optional<std::int64_t> chi) {
  ObstructionOutcome out;
  out.name = "chi-window";
  std::ostringstream detail;
  if (fiber_genus < 2 || base_genus < 2) {
    out.status = Status::inconclusive;
    detail << "the characteristic-number window needs fiber and base genus "
              ">= 2";
    out.detail = detail.str();
    return out;
  }
  const std::int64_t p = static_cast<std::int64_t>(base_genus - 1) *
                         static_cast<std::int64_t>(fiber_genus - 1);
  if (chi) {
    if (3 * p < 3 * *chi && 3 * *chi < 4 * p) {
      const ChernInvariants inv =
          chern_invariants(fiber_genus, base_genus, *chi);
      out.status = Status::passed;
      detail << 3 * p << " < 3 chi = " << 3 * *chi << " < " << 4 * p
             << "; e = " << inv.e << ", sigma = " << inv.sigma
             << ", K^2 = " << inv.k2 << ", slope = " << inv.slope.get_str();
    } else {
      out.status = Status::excluded;
      detail << "3 chi = " << 3 * *chi << " lies outside the open window ("
             << 3 * p << ", " << 4 * p << ")";
    }
    out.detail = detail.str();
    return out;
  }
  const std::vector<std::int64_t> values =
      admissible_chi(fiber_genus, base_genus);
  if (values.empty()) {
    out.status = Status::excluded;
    detail << "no integer chi satisfies " << 3 * p << " < 3 chi < " << 4 * p;
  } else {
    out.status = Status::inconclusive;
    detail << "chi unknown; admissible values: ";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) detail << ", ";
      detail << values[i];
    }
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_signature_positivity(
    std::optional<std::int64_t> signature) {
  ObstructionOutcome out;
  out.name = "signature-positivity";
  std::ostringstream detail;
  if (!signature) {
    out.status = Status::inconclusive;
    detail << "the signature of the total space is not tracked";
  } else if (*signature > 0) {
    out.status = Status::passed;
    detail << "sigma = " << *signature << " > 0";
  } else {
    out.status = Status::excluded;
    detail << "sigma = " << *signature
           << " <= 0, but Kodaira fibrations have strictly positive "
              "signature";
  }
  out.detail = detail.str();
  return out;
}

ObstructionOutcome check_modified_xiao(std::size_t fiber_genus,
                                       std::size_t q_f_lo,
                                       std::size_t q_f_hi) {
  if (q_f_lo > q_f_hi) throw InvalidSpec("empty q_f interval");
  ObstructionOutcome out;
  out.name = "modified-xiao";
  std::ostringstream detail;
  const std::size_t bound = fiber_genus + 2;
  if (2 * q_f_lo > bound) {
    out.status = Status::conditional;
    detail << "2 q_f >= " << 2 * q_f_lo << " > " << bound
           << " = g + 2 for every admissible q_f: excluded if the "
              "conjectural irregularity bound holds";
  } else if (2 * q_f_hi <= bound) {
    out.status = Status::passed;
    detail << "2 q_f <= " << 2 * q_f_hi << " <= " << bound
           << " = g + 2 for every admissible q_f";
  } else {
    out.status = Status::inconclusive;
    detail << "the conjectural bound 2 q_f <= g + 2 = " << bound
           << " is violated for some but not all admissible q_f (q_f in ["
           << q_f_lo << ", " << q_f_hi << "])";
  }
  out.detail = detail.str();
  return out;
}

namespace {

// Even ranks admitted by an interval, as [min_even, max_even];
// returns false when the interval admits no even rank.
bool even_range(const RankInterval& interval, std::size_t& lo,
                std::size_t& hi) {
  if (interval.parity == RankParity::odd) return false;
  lo = interval.lo % 2 == 0 ? interval.lo : interval.lo + 1;
  hi = interval.hi % 2 == 0 ? interval.hi : interval.hi - 1;
  return lo <= hi;
}

struct SweepWitness {
  CyclicCoverSpec spec;
  std::optional<std::size_t> twisted;  // set for single-generator specs
  CoinvariantsReport report;
  bool parity_failure = false;
};

std::string describe_spec(const SurfacePresentation& base,
                          const CyclicCoverSpec& spec,
                          const std::optional<std::size_t>& twisted) {
  std::ostringstream out;
  out << "degree-" << spec.degree << " cover ";
  if (twisted) {
    out << "twisting " << base.generator_name(*twisted);
  } else {
    out << "with images " << join_images(spec.images);
  }
  return out.str();
}

}  // namespace

ObstructionOutcome cover_sweep(const BundleSpec& bundle,
                               const CheckConfig& config) {
  ObstructionOutcome out;
  out.name = "cover-sweep";
  if (!bundle.is_explicit()) {
    out.status = Status::inconclusive;
    out.detail = bundle.is_declared()
                     ? "cover restriction needs explicit monodromy; the "
                       "bundle is a declared block"
                     : "cover restriction of a computed generating set is "
                       "not supported";
    return out;
  }
  std::vector<std::size_t> degrees = config.cover_degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  if (!degrees.empty() && degrees.front() < 1) {
    throw InvalidSpec("cover degrees must be at least 1");
  }
  if (degrees.empty()) {
    out.status = Status::inconclusive;
    out.detail = "no cover degrees configured";
    return out;
  }

  const SymplecticRep& rep = bundle.rep();
  const std::size_t g = rep.fiber_genus;
  const std::size_t count = 2 * rep.base_genus;
  const SurfacePresentation base(rep.base_genus);

  std::size_t tried = 0;
  std::optional<SweepWitness> witness;
  bool capped = false;
  std::size_t capped_at_degree = 0;

  auto consider = [&](const CyclicCoverSpec& spec,
                      std::optional<std::size_t> twisted) -> bool {
    if (tried == config.exhaustive_cap) {
      capped = true;
      capped_at_degree = spec.degree;
      return true;  // stop
    }
    ++tried;
    const BundleSpec restricted = restrict_to_cover(bundle, spec);
    CoinvariantsReport report = coinvariants(restricted);
    if (report.rank % 2 != 0) {
      witness = SweepWitness{spec, twisted, std::move(report), true};
      return true;
    }
    const std::size_t s = g - report.rank / 2;
    if (g > 1 + 6 * s) {
      witness = SweepWitness{spec, twisted, std::move(report), false};
      return true;
    }
    return false;
  };

  for (std::size_t n : degrees) {
    bool stop = false;
    if (config.cover_strategy == CheckConfig::CoverStrategy::single_generator) {
      const std::size_t variants = n == 1 ? 1 : count;
      for (std::size_t gen = 0; gen < variants && !stop; ++gen) {
        stop = consider(twist_single_generator(n, gen, count), gen);
      }
    } else {
      // Lexicographic odometer over all image vectors, keeping the
      // surjective ones.
      std::vector<std::size_t> v(count, 0);
      for (;;) {
        std::size_t d = n;
        for (std::size_t x : v) d = std::gcd(d, x);
        if (d == 1) {
          CyclicCoverSpec spec{n, v};
          if ((stop = consider(spec, std::nullopt))) break;
        }
        bool wrapped = true;
        for (std::size_t i = count; i-- > 0;) {
          if (++v[i] < n) {
            wrapped = false;
            break;
          }
          v[i] = 0;
        }
        if (wrapped) break;
      }
    }
    if (stop) break;
  }

  std::ostringstream detail;
  if (witness) {
    out.status = Status::excluded;
    const CoinvariantsReport& r = witness->report;
    detail << describe_spec(base, witness->spec, witness->twisted)
           << ": cover base genus " << r.base_genus << ", coinvariant rank "
           << r.rank;
    if (witness->parity_failure) {
      detail << " is odd, so b1 = " << r.b1
             << " is odd and the total space cannot be Kaehler";
    } else {
      detail << ", s = " << *r.s << ", and g = " << g << " > "
             << 1 + 6 * *r.s << " = 1 + 6s";
    }
  } else if (capped) {
    out.status = Status::inconclusive;
    out.warning = true;
    detail << "stopped after the configured cap of " << config.exhaustive_cap
           << " cover specs (reached at degree " << capped_at_degree
           << ") without finding a witness";
  } else {
    out.status = Status::passed;
    detail << "no witness among " << tried
           << " cyclic covers (degrees up to " << degrees.back() << ")";
  }
  out.detail = detail.str();
  return out;
}

const ObstructionOutcome* Verdict::find(const std::string& name) const {
  for (const auto& o : outcomes) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

std::string Verdict::overall() const {
  return excluded ? "excluded" : "not-excluded";
}

Verdict run_verdict(const BundleSpec& bundle, const CheckConfig& config) {
  Verdict verdict;
  const std::size_t g = bundle.fiber_genus();
  const std::size_t b = bundle.base_genus();
  const RankInterval interval = rank_interval(bundle);

  verdict.outcomes.push_back(check_genus_bounds(g, b));
  verdict.outcomes.push_back(check_rank_parity(interval, b));
  verdict.outcomes.push_back(check_torelli_product(bundle));

  std::size_t even_lo = 0, even_hi = 0;
  const bool has_even = even_range(interval, even_lo, even_hi);
  if (has_even) {
    verdict.outcomes.push_back(
        check_xiao_interval(g, g - even_hi / 2, g - even_lo / 2));
  } else {
    ObstructionOutcome skip;
    skip.name = "xiao-bound";
    skip.status = Status::inconclusive;
    skip.detail =
        "s = g - rank/2 is undefined: no even rank is admissible (the "
        "parity check applies instead)";
    verdict.outcomes.push_back(std::move(skip));
  }

  verdict.outcomes.push_back(check_chi_window(g, b, config.chi));
  verdict.outcomes.push_back(check_signature_positivity(bundle.signature()));

  if (config.enable_modified_xiao) {
    if (has_even) {
      verdict.outcomes.push_back(
          check_modified_xiao(g, even_lo / 2, even_hi / 2));
    } else {
      ObstructionOutcome skip;
      skip.name = "modified-xiao";
      skip.status = Status::inconclusive;
      skip.detail = "q_f is undefined: no even rank is admissible";
      verdict.outcomes.push_back(std::move(skip));
    }
  }

  verdict.outcomes.push_back(cover_sweep(bundle, config));

  for (const auto& o : verdict.outcomes) {
    if (o.status == Status::excluded) verdict.excluded = true;
    if (o.warning) verdict.has_warnings = true;
  }
  return verdict;
}

}  // namespace kodaira
