#include "su3cd/classify.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "su3cd/congruence.hpp"
#include "su3cd/errors.hpp"

namespace su3cd {

namespace {

std::uint64_t phi3_mod(std::uint64_t k, std::uint64_t m) {
  return std::uint64_t((static_cast<unsigned __int128>(k) * k + k + 1) % m);
}

std::uint64_t phi3_div(std::uint64_t k, std::uint64_t m) {
  return std::uint64_t((static_cast<unsigned __int128>(k) * k + k + 1) / m);
}

std::uint32_t group_modulus(const GroupSpec& spec) {
  if (spec.m == 0 || spec.m > 0xffffffffull) {
    throw std::invalid_argument("group modulus must fit in 32 bits");
  }
  const std::uint32_t m = std::uint32_t(spec.m);
  return spec.kind == Kind::C ? m : lcm_modulus(2, m);
}

void require_valid(const GroupSpec& spec, const char* who) {
  if (!spec_exists(spec)) {
    throw std::invalid_argument(std::string(who) + ": no such group " + format_spec(spec));
  }
}

// Parses "(a,b,c)" or "(a,b,c;d,e,f)" bodies into numbers.
bool parse_uint(std::string_view& s, std::uint64_t& out) {
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr == begin) return false;
  s.remove_prefix(std::size_t(res.ptr - begin));
  return true;
}

}  // namespace

std::string format_spec(const GroupSpec& spec) {
  std::ostringstream os;
  os << (spec.kind == Kind::C ? 'C' : 'D') << '(' << spec.m << ',' << spec.n << ','
     << spec.k << ')';
  return os.str();
}

std::optional<GroupSpec> parse_spec(std::string_view text) {
  if (text.size() < 6) return std::nullopt;
  GroupSpec spec;
  if (text.front() == 'C') {
    spec.kind = Kind::C;
  } else if (text.front() == 'D') {
    spec.kind = Kind::D;
  } else {
    return std::nullopt;
  }
  text.remove_prefix(1);
  if (text.empty() || text.front() != '(') return std::nullopt;
  text.remove_prefix(1);
  if (!parse_uint(text, spec.m) || text.empty() || text.front() != ',') return std::nullopt;
  text.remove_prefix(1);
  if (!parse_uint(text, spec.n) || text.empty() || text.front() != ',') return std::nullopt;
  text.remove_prefix(1);
  if (!parse_uint(text, spec.k) || text.empty() || text.front() != ')') return std::nullopt;
  text.remove_prefix(1);
  if (!text.empty()) return std::nullopt;
  return spec;
}

bool spec_exists(Kind kind, std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m == 0 || n == 0 || m % n != 0) return false;
  const std::uint64_t r = m / n;
  if (k >= r) return false;
  if (phi3_mod(k, r) != 0) return false;
  if (kind == Kind::D && (1 + 2 * k) % r != 0) return false;
  return true;
}

DerivedParams derived_params(const GroupSpec& spec) {
  require_valid(spec, "derived_params");
  DerivedParams d;
  d.ell = phi3_div(spec.k, spec.r());
  if (spec.kind == Kind::D) d.ell_prime = (1 + 2 * spec.k) / spec.r();
  return d;
}

std::vector<MonomialMatrix> generators_for(const GroupSpec& spec) {
  require_valid(spec, "generators_for");
  const std::uint32_t l = group_modulus(spec);
  std::vector<MonomialMatrix> gens{
      make_e(l),
      make_f_canonical(spec.m, spec.k).rescaled(l),
      make_g_canonical(spec.m, spec.n).rescaled(l),
  };
  if (spec.kind == Kind::D) gens.push_back(make_b(l));
  return gens;
}

FiniteMatrixGroup build_group(const GroupSpec& spec, std::uint64_t cap) {
  FiniteMatrixGroup g = closure(generators_for(spec), cap);
  if (g.order() != spec.order()) {
    throw VerificationError("build_group: " + format_spec(spec) + " closed to order " +
                            std::to_string(g.order()) + ", expected " +
                            std::to_string(spec.order()));
  }
  return g;
}

bool check_presentation(const GroupSpec& spec, std::string* failed_relation) {
  // Evaluated for arbitrary (m, n, k) so that corrupted specs report false
  // instead of throwing; ell, ell' are floor divisions in that case.
  if (spec.m == 0 || spec.n == 0 || spec.m % spec.n != 0 || spec.k >= spec.r()) {
    if (failed_relation) *failed_relation = "parameter domain";
    return false;
  }
  const std::uint64_t r = spec.r();
  const std::uint64_t ell = phi3_div(spec.k, r);
  const std::uint64_t ell_prime = (1 + 2 * spec.k) / r;
  const std::uint32_t l = group_modulus(spec);
  const MonomialMatrix e = make_e(l);
  const MonomialMatrix f = make_f_canonical(spec.m, spec.k).rescaled(l);
  const MonomialMatrix g = make_g_canonical(spec.m, spec.n).rescaled(l);
  const MonomialMatrix id = MonomialMatrix::identity(l);

  const auto check = [&](const char* name, const MonomialMatrix& lhs,
                         const MonomialMatrix& rhs) {
    if (lhs.same_matrix(rhs)) return true;
    if (failed_relation) *failed_relation = name;
    return false;
  };

  if (!check("E^3 = 1", e.pow(3), id)) return false;
  if (!check("F^m = 1", f.pow(std::int64_t(spec.m)), id)) return false;
  if (!check("G^n = 1", g.pow(std::int64_t(spec.n)), id)) return false;
  if (!check("FG = GF", f * g, g * f)) return false;
  if (!check("E F E^-1 = F^k G^ell", e * f * e.inverse(),
             f.pow(std::int64_t(spec.k)) * g.pow(std::int64_t(ell)))) {
    return false;
  }
  if (!check("E G E^-1 = F^-r G^-(k+1)", e * g * e.inverse(),
             f.pow(-std::int64_t(r)) * g.pow(-std::int64_t(spec.k + 1)))) {
    return false;
  }
  if (spec.kind == Kind::D) {
    const MonomialMatrix b = make_b(l);
    if (!check("B^2 = 1", b * b, id)) return false;
    if (!check("(EB)^2 = 1", (e * b).pow(2), id)) return false;
    if (!check("B F B^-1 = F G^ell'", b * f * b.inverse(),
               f * g.pow(std::int64_t(ell_prime)))) {
      return false;
    }
    if (!check("B G B^-1 = G^-1", b * g * b.inverse(), g.inverse())) return false;
  }
  return true;
}

bool spec_isomorphic(const GroupSpec& s1, const GroupSpec& s2) {
  require_valid(s1, "spec_isomorphic");
  require_valid(s2, "spec_isomorphic");
  if (s1.kind != s2.kind || s1.m != s2.m || s1.n != s2.n) return false;
  return s1.k == s2.k || 1 + s1.k + s2.k == s1.r();
}

std::optional<MonomialMatrix> conjugation_witness(const GroupSpec& s1, const GroupSpec& s2) {
  if (!spec_isomorphic(s1, s2) || s1.k == s2.k) return std::nullopt;
  return make_b(lcm_modulus(2, group_modulus(s1)));
}

GroupSpec canonical_spec(const GroupSpec& spec) {
  require_valid(spec, "canonical_spec");
  GroupSpec out = spec;
  out.k = std::min(spec.k, spec.r() - 1 - spec.k);
  return out;
}

std::optional<GroupSpec> factorize_spec(const GroupSpec& spec) {
  require_valid(spec, "factorize_spec");
  if (spec.m % 3 != 0 || (spec.m / 3) % 3 == 0 || spec.n % 3 == 0) return std::nullopt;
  if (spec.k % 3 != 1) {
    throw VerificationError("factorize_spec: k = " + std::to_string(spec.k) +
                            " is not 1 (mod 3) on the factorizing branch");
  }
  const std::uint64_t r_inner = spec.r() / 3;
  return GroupSpec{spec.kind, spec.m / 3, spec.n, spec.k % r_inner};
}

const char* series_label_name(SeriesLabel label) {
  switch (label) {
    case SeriesLabel::CPrimitive: return "C_primitive";
    case SeriesLabel::CTimesZ3: return "C_times_Z3";
    case SeriesLabel::C933: return "C_933";
    case SeriesLabel::Delta3n2: return "Delta3n2";
    case SeriesLabel::Tm: return "Tm";
    case SeriesLabel::Delta6n2: return "Delta6n2";
    case SeriesLabel::Delta6n2TimesZ3: return "Delta6n2_times_Z3";
    case SeriesLabel::D931: return "D_931";
  }
  return "?";
}

SeriesDescriptor series_label(const GroupSpec& spec) {
  require_valid(spec, "series_label");
  const std::uint64_t r = spec.r();
  std::ostringstream os;
  SeriesDescriptor d{SeriesLabel::CPrimitive, r, spec.n, {}};
  if (spec.kind == Kind::C) {
    if (r == 1) {
      d.label = SeriesLabel::Delta3n2;
      d.r_param = 1;
      os << "Delta(" << 3 * spec.n * spec.n << ")";
    } else if (r % 3 == 0 && spec.n % 3 != 0) {
      d.label = SeriesLabel::CTimesZ3;
      d.r_param = r / 3;
      os << "Z3 x C(" << d.r_param << "n,n)^(" << spec.k % (r / 3) << ")";
    } else if (r % 3 == 0) {
      d.label = SeriesLabel::C933;
      d.r_param = r / 3;
      d.n_param = spec.n / 3;
      os << "C(" << 9 * d.r_param << "n',3n')^(" << spec.k << ")";
    } else if (spec.n == 1) {
      d.label = SeriesLabel::Tm;
      d.r_param = spec.m;
      os << "T(" << spec.m << ")";
    } else {
      os << "C(" << r << "n,n)^(" << spec.k << ")";
    }
  } else {
    if (r == 1) {
      d.label = SeriesLabel::Delta6n2;
      os << "Delta(" << 6 * spec.n * spec.n << ")";
    } else if (spec.n % 3 != 0) {
      d.label = SeriesLabel::Delta6n2TimesZ3;
      d.r_param = 1;
      os << "Z3 x Delta(" << 6 * spec.n * spec.n << ")";
    } else {
      d.label = SeriesLabel::D931;
      d.r_param = 1;
      d.n_param = spec.n / 3;
      os << "D(9n',3n')^(1), n'=" << d.n_param;
    }
  }
  d.display = os.str();
  return d;
}

std::vector<GroupSpec> enumerate_specs(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  if (max_order < 3) return out;
  for (const auto& [r, ks] : admissible_r_list(max_order / 3)) {
    (void)ks;
    for (const std::uint64_t k : canonical_k_values(r)) {
      for (std::uint64_t n = 1; 3 * r * n * n <= max_order; ++n) {
        out.push_back(GroupSpec{Kind::C, r * n, n, k});
      }
    }
  }
  for (const auto& [r, k] : {std::pair<std::uint64_t, std::uint64_t>{1, 0}, {3, 1}}) {
    for (std::uint64_t n = 1; 6 * r * n * n <= max_order; ++n) {
      out.push_back(GroupSpec{Kind::D, r * n, n, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    return std::tuple(a.order(), a.kind, a.m, a.n, a.k) <
           std::tuple(b.order(), b.kind, b.m, b.n, b.k);
  });
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> single_diagonal_generator(
    const GroupSpec& spec, std::uint64_t cap) {
  require_valid(spec, "single_diagonal_generator");
  const std::uint64_t full = spec.order();
  if (full > cap) {
    throw CapExceededError("single_diagonal_generator: order " + std::to_string(full) +
                           " exceeds cap " + std::to_string(cap));
  }
  const std::uint32_t l = group_modulus(spec);
  const MonomialMatrix e = make_e(l);
  const MonomialMatrix f = make_f_canonical(spec.m, spec.k).rescaled(l);
  const MonomialMatrix g = make_g_canonical(spec.m, spec.n).rescaled(l);
  const bool with_b = spec.kind == Kind::D;
  const MonomialMatrix b = with_b ? make_b(l) : MonomialMatrix::identity(l);

  MonomialMatrix fa = MonomialMatrix::identity(l);
  for (std::uint64_t a = 0; a < spec.m; ++a) {
    MonomialMatrix h = fa;
    for (std::uint64_t bexp = 0; bexp < spec.n; ++bexp) {
      std::vector<MonomialMatrix> gens{h, e};
      if (with_b) gens.push_back(b);
      if (closure(gens, full).order() == full) return std::pair{a, bexp};
      h = h * g;
    }
    fa = fa * f;
  }
  return std::nullopt;
}

}  // namespace su3cd
