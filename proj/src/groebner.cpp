#include "brim/groebner.hpp"

namespace brim {

template GroebnerBasis<Rational> groebner(const std::vector<Polynomial<Rational>>&, MonomialOrder, GroebnerOptions);
template GroebnerBasis<Fp> groebner(const std::vector<Polynomial<Fp>>&, MonomialOrder, GroebnerOptions);
template Polynomial<Rational> normal_form(const Polynomial<Rational>&, const GroebnerBasis<Rational>&);
template Polynomial<Fp> normal_form(const Polynomial<Fp>&, const GroebnerBasis<Fp>&);

namespace detail {

namespace {

constexpr std::size_t kMaxPrimes = 3000;
constexpr int kMaxConflicts = 3;

// Rational reconstruction of u mod m with |num|, den <= sqrt(m/2).
bool reconstruct(const Integer& u, const Integer& m, Rational& out) {
  Integer bound;
  mpz_fdiv_q_ui(bound.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || t1 == 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  return true;
}

// Accumulated images of a reduced basis: one term list per element,
// coefficients kept as residues modulo the product of the primes used.
struct Lift {
  std::vector<std::vector<Term<Integer>>> polys;
  std::vector<Monomial> leads;
  std::size_t count = 0;
  Integer modulus = 1;
  std::size_t primes = 0;
};

void absorb(Lift& lift, const std::vector<Polynomial<ModP>>& basis, std::uint32_t p) {
  if (lift.primes == 0) {
    lift.polys.clear();
    for (const auto& g : basis) {
      std::vector<Term<Integer>> terms;
      for (const auto& t : g.terms()) terms.push_back({Integer(t.coef.value()), t.mono, t.key});
      lift.polys.push_back(std::move(terms));
    }
    lift.modulus = p;
    lift.primes = 1;
    return;
  }
  const ModP minv = ModP(lift.modulus).inverse();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& old = lift.polys[k];
    const auto& img = basis[k].terms();
    std::vector<Term<Integer>> merged;
    merged.reserve(std::max(old.size(), img.size()));
    std::size_t i = 0, j = 0;
    auto combine = [&](const Integer* a, std::uint32_t b, const Monomial& mono, std::int64_t key) {
      const std::uint32_t ar = a ? static_cast<std::uint32_t>(mpz_fdiv_ui(a->get_mpz_t(), p)) : 0;
      const ModP step = (ModP(static_cast<long>(b)) - ModP(static_cast<long>(ar))) * minv;
      Integer x = a ? *a : Integer(0);
      x += lift.modulus * step.value();
      if (x != 0) merged.push_back({std::move(x), mono, key});
    };
    while (i < old.size() || j < img.size()) {
      if (j == img.size() || (i < old.size() && term_greater(old[i], Term<Integer>{0, img[j].mono, img[j].key}))) {
        combine(&old[i].coef, 0, old[i].mono, old[i].key);
        ++i;
      } else if (i == old.size() || !same_position(old[i], Term<Integer>{0, img[j].mono, img[j].key})) {
        combine(nullptr, img[j].coef.value(), img[j].mono, img[j].key);
        ++j;
      } else {
        combine(&old[i].coef, img[j].coef.value(), old[i].mono, old[i].key);
        ++i;
        ++j;
      }
    }
    lift.polys[k] = std::move(merged);
  }
  lift.modulus *= p;
  ++lift.primes;
}

std::optional<std::vector<Polynomial<Rational>>> reconstruct_all(const Lift& lift, MonomialOrder order, int rank) {
  std::vector<Polynomial<Rational>> out;
  for (const auto& terms : lift.polys) {
    std::vector<std::pair<Rational, Monomial>> raw;
    for (const auto& t : terms) {
      Rational q;
      if (!reconstruct(t.coef, lift.modulus, q)) return std::nullopt;
      raw.emplace_back(std::move(q), t.mono);
    }
    out.push_back(Polynomial<Rational>::from_terms(std::move(raw), 2, order, rank));
  }
  return out;
}

// Certifies that `basis` is the reduced basis of (gens) + m^N F over Q, given
// that its leading terms match a prime whose quotient has the same dimension.
// Over any prime the quotient is at least as large as over Q, so a Gröbner
// basis containing the generators with that many standard monomials spans
// exactly (gens) + m^N F.
bool certify(const std::vector<Polynomial<Integer>>& basis, const std::vector<Polynomial<Integer>>& gens,
             MonomialOrder order, int rank, int trunc) {
  Reducer<Integer> red(trunc);
  for (const auto& g : basis) red.add(g);
  for (const auto& g : gens)
    if (!red.reduce(g, false).is_zero()) return false;
  // Same installation order as the engine: m^N F first, then the basis.
  std::vector<Polynomial<Integer>> all;
  for (int c = 0; c < rank; ++c)
    for (int a = 0; a <= trunc; ++a) {
      Monomial m;
      m.exp[0] = static_cast<std::uint16_t>(a);
      m.exp[1] = static_cast<std::uint16_t>(trunc - a);
      m.comp = static_cast<std::uint16_t>(c);
      all.push_back(Polynomial<Integer>::term(Integer(1), m, 2, order, rank));
    }
  all.insert(all.end(), basis.begin(), basis.end());
  PairQueue queue(order, rank == 1);
  for (const auto& g : all) queue.insert(g.leading_monomial());
  while (!queue.empty()) {
    const CriticalPair p = queue.pop();
    if (all[p.i].size() == 1 && all[p.j].size() == 1) continue;
    if (!red.reduce(s_polynomial(all[p.i], all[p.j]), false).is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial<Integer>> interreduce(std::vector<Polynomial<Integer>> basis, int trunc) {
  Reducer<Integer> fin(trunc);
  for (const auto& g : basis) fin.add(g);
  std::vector<Polynomial<Integer>> out;
  for (std::size_t i = 0; i < fin.size(); ++i) {
    const auto& g = fin.poly(i);
    out.push_back(g.leading_monomial().degree_xy() >= trunc ? g : fin.reduce(g, true, i));
  }
  for (auto& g : out) Reducer<Integer>::normalize(g);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return term_greater(b.leading_term(), a.leading_term()); });
  return out;
}

}  // namespace

std::optional<std::vector<Polynomial<Integer>>> modular_lift(const ModularProblem& problem) {
  const std::uint32_t saved = ModP::prime();
  Lift lift;
  int conflicts = 0;
  std::size_t next_certify = 1;
  std::vector<Rational> probe;
  Integer p = Integer(1) << 31;
  std::optional<std::vector<Polynomial<Integer>>> result;
  for (std::size_t used = 0; used < kMaxPrimes && !result; ++used) {
    do {
      --p;
    } while (mpz_probab_prime_p(p.get_mpz_t(), 25) == 0);
    const auto prime = static_cast<std::uint32_t>(p.get_ui());
    ModP::set_prime(prime);
    auto basis = problem.image();
    if (!basis) continue;
    GroebnerBasis<ModP> gb(*basis, problem.order, problem.rank, true, problem.trunc);
    const auto leads = gb.leading_monomials();
    const std::size_t count = quotient_dimension(gb).value_or(0);
    if (lift.primes > 0 && !(leads == lift.leads)) {
      if (problem.lucky_is_smaller ? count < lift.count : count > lift.count) {
        lift = Lift{};
      } else {
        if (count == lift.count && ++conflicts > kMaxConflicts) break;
        continue;
      }
    }
    if (lift.primes == 0) {
      lift.leads = leads;
      lift.count = count;
      next_certify = 1;
      probe.clear();
    }
    absorb(lift, *basis, prime);

    // Cheap stability probe on the last coefficient of every element.
    std::vector<Rational> now;
    bool ok = true;
    for (const auto& terms : lift.polys) {
      Rational q;
      if (!reconstruct(terms.back().coef, lift.modulus, q)) {
        ok = false;
        break;
      }
      now.push_back(q);
    }
    const bool stable = ok && now == probe;
    probe = ok ? now : std::vector<Rational>{};
    if (!stable || lift.primes < next_certify) continue;

    auto rat = reconstruct_all(lift, problem.order, problem.rank);
    if (!rat) continue;
    std::vector<Polynomial<Integer>> candidate;
    for (const auto& g : *rat) candidate.push_back(clear_denominators(g));
    if (problem.certify(candidate)) {
      result = interreduce(std::move(candidate), problem.trunc);
    } else {
      next_certify = lift.primes * 2;
    }
  }
  ModP::set_prime(saved);
  return result;
}

bool certify_truncated_basis(const std::vector<Polynomial<Integer>>& basis,
                             const std::vector<Polynomial<Integer>>& gens, MonomialOrder order, int rank, int trunc) {
  return certify(basis, gens, order, rank, trunc);
}

std::optional<std::vector<Polynomial<Integer>>> modular_truncated_basis(const std::vector<Polynomial<Integer>>& gens,
                                                                        MonomialOrder order, int rank, int trunc) {
  ModularProblem problem;
  problem.order = order;
  problem.rank = rank;
  problem.trunc = trunc;
  problem.lucky_is_smaller = true;
  problem.image = [&]() -> std::optional<std::vector<Polynomial<ModP>>> {
    std::vector<Polynomial<ModP>> image;
    for (const auto& g : gens) {
      auto h = map_coefficients<ModP>(g, [](const Integer& c) { return ModP(c); });
      if (!h.is_zero()) image.push_back(std::move(h));
    }
    return buchberger<ModP>(std::move(image), order, rank, trunc);
  };
  problem.certify = [&](const std::vector<Polynomial<Integer>>& basis) {
    return certify(basis, gens, order, rank, trunc);
  };
  return modular_lift(problem);
}

}  // namespace detail

}  // namespace brim
