#include "centra/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "centra/arith.hpp"
#include "centra/centralizer.hpp"
#include "centra/classifier.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"
#include "centra/zclass.hpp"

namespace centra {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "HOLDS";
    case Status::HypothesisNotMet: return "HYPOTHESIS_NOT_MET";
    case Status::Violation: return "VIOLATION";
    case Status::SkippedBudget: return "SKIPPED(budget)";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (int i = 1; i <= 18; ++i) v.push_back("T" + std::to_string(i));
    return v;
  }();
  return ids;
}

namespace {

int theorem_number(std::string_view id) {
  if (id.size() < 2 || id[0] != 'T') return 0;
  int n = 0;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return 0;
    n = n * 10 + (c - '0');
    if (n > 18) return 0;
  }
  return n;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> parse_theorem_selection(std::string_view text) {
  std::vector<bool> pick(19, false);
  bool assert_check = false;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    if (item == "ASSERT") {
      assert_check = true;
      continue;
    }
    const auto dash = item.find('-');
    const int lo = theorem_number(trim(item.substr(0, dash)));
    const int hi = dash == std::string_view::npos ? lo : theorem_number(trim(item.substr(dash + 1)));
    if (lo == 0 || hi == 0 || hi < lo) throw OutOfRange("theorem selection '" + std::string(item) + "'");
    for (int i = lo; i <= hi; ++i) pick[i] = true;
  }
  std::vector<std::string> out;
  for (int i = 1; i <= 18; ++i)
    if (pick[i]) out.push_back("T" + std::to_string(i));
  if (assert_check) out.emplace_back("ASSERT");
  return out;
}

std::size_t RunReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [s](const TheoremOutcome& o) { return o.status == s; }));
}

int RunReport::exit_code() const {
  bool load_error = false;
  for (const auto& o : outcomes) {
    if (o.status == Status::Violation || (o.status == Status::Error && o.theorem_id != "LOAD")) return 2;
    if (o.status == Status::Error) load_error = true;
  }
  return load_error ? 3 : 0;
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

/// "key=value" fragments joined by spaces.
class Detail {
 public:
  template <class T>
  Detail& add(std::string_view key, const T& value) {
    sep();
    os_ << key << '=' << value;
    return *this;
  }
  Detail& add(std::string_view key, bool value) {
    sep();
    os_ << key << '=' << (value ? "true" : "false");
    return *this;
  }
  Detail& note(std::string_view text) {
    sep();
    os_ << text;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  void sep() {
    if (!first_) os_ << ' ';
    first_ = false;
  }
  std::ostringstream os_;
  bool first_ = true;
};

std::uint64_t geometric(std::uint64_t p, unsigned k) { return (ipow(p, k) - 1) / (p - 1) + 1; }

/// Lazily computed facts about one corpus group, shared by all checks.
class Analysis {
 public:
  explicit Analysis(const Group& g) : g_(g) {}

  const Group& group() const { return g_; }
  const CentralizerProfile& prof() {
    if (!prof_) prof_ = profile(g_);
    return *prof_;
  }
  const ZClassPartition& zp() {
    if (!z_) z_ = z_partition(g_, prof());
    return *z_;
  }
  const SubgroupSet& derived() {
    if (!derived_) derived_ = commutator_subgroup(g_);
    return *derived_;
  }
  const Group& central_quotient() {
    if (!quotient_) quotient_ = quotient(g_, prof().center, g_.name() + "/Z");
    return *quotient_;
  }
  const ClassificationReport& report() {
    if (!report_) report_ = classify(g_, prof(), zp());
    return *report_;
  }
  const CommutatorSignature& signature() {
    if (!signature_) signature_ = commutator_map_signature(g_);
    return *signature_;
  }

  bool abelian() const { return g_.is_abelian(); }
  std::size_t center_index() { return prof().center_index(); }
  /// p with G/Z(G) elementary abelian of order p^k, k >= 1.
  std::optional<std::uint64_t> quotient_elementary_prime() {
    if (!elementary_) elementary_ = elementary_abelian_prime(central_quotient());
    return *elementary_;
  }
  bool all_quotients_equal(std::size_t s) {
    for (std::size_t i = 0; i < prof().centers.size(); ++i)
      if (prof().center_quotient_size(i) != s) return false;
    return true;
  }

 private:
  const Group& g_;
  std::optional<CentralizerProfile> prof_;
  std::optional<ZClassPartition> z_;
  std::optional<SubgroupSet> derived_;
  std::optional<Group> quotient_;
  std::optional<ClassificationReport> report_;
  std::optional<CommutatorSignature> signature_;
  std::optional<std::optional<std::uint64_t>> elementary_;
};

struct Outcome {
  Status status = Status::Holds;
  std::string detail;
};

Outcome unmet(std::string why) { return {Status::HypothesisNotMet, std::move(why)}; }
Outcome verdict(bool ok, const Detail& d) { return {ok ? Status::Holds : Status::Violation, d.str()}; }

/// Pairs of corpus groups already searched for isoclinism.
enum class Iso { Yes, No, Budget };

class Runner {
 public:
  Runner(const std::vector<CorpusEntry>& corpus, std::uint64_t budget) : corpus_(corpus), budget_(budget) {
    for (const auto& e : corpus_) analyses_.push_back(e.group ? std::make_unique<Analysis>(*e.group) : nullptr);
  }

  Outcome check(int t, std::size_t i) {
    Analysis& a = *analyses_[i];
    switch (t) {
      case 1: return t1(a);
      case 2: return t2(i);
      case 3: return t3(a);
      case 4: return t4(a);
      case 5: return t5(a);
      case 6: return t6(i);
      case 7: return t7(a);
      case 8: return t8(a);
      case 9: return t9(a);
      case 10: return t10(a);
      case 11: return t11(a);
      case 12: return t12(a);
      case 13: return t13(a);
      case 14: return t14(i);
      case 15: return t15(i);
      case 16: return t16(a);
      case 17: return t17(a);
      case 18: return t18(a);
    }
    return {Status::Error, "unknown check"};
  }

  Outcome assertions(std::size_t i) {
    const Record rec = analysis_record(*corpus_[i].group);
    std::map<std::string, std::string> values(rec.begin(), rec.end());
    Detail d;
    bool ok = true;
    for (const auto& [key, expected] : corpus_[i].assertions) {
      const auto it = values.find(key);
      if (it == values.end()) {
        ok = false;
        d.note("unknown key " + key);
      } else if (it->second != expected) {
        ok = false;
        d.note(key + "=" + it->second + " expected " + expected);
      } else {
        d.add(key, it->second);
      }
    }
    return verdict(ok, d);
  }

 private:
  Iso isoclinic(std::size_t i, std::size_t j) {
    const auto key = std::minmax(i, j);
    if (auto it = pairs_.find(key); it != pairs_.end()) return it->second;
    Analysis& a = *analyses_[i];
    Analysis& b = *analyses_[j];
    Iso r = Iso::No;
    if (a.center_index() == b.center_index() && a.derived().size() == b.derived().size() &&
        a.signature() == b.signature()) {
      r = isoclinic(a.group(), b.group());
    }
    pairs_.emplace(key, r);
    return r;
  }

  Iso isoclinic(const Group& g, const Group& h) {
    try {
      return are_isoclinic(g, h, budget_).isoclinic() ? Iso::Yes : Iso::No;
    } catch (const SearchBudgetExceeded&) {
      return Iso::Budget;
    }
  }

  /// Corpus groups satisfying `pred`, excluding entry i.
  std::vector<std::size_t> corpus_where(std::size_t i, const std::function<bool(Analysis&)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < analyses_.size(); ++j)
      if (j != i && analyses_[j] && pred(*analyses_[j])) out.push_back(j);
    return out;
  }

  static bool is_ultraspecial_of_order(Analysis& x, std::uint64_t order) {
    return x.group().order() == order && p_group_prime(x.group()) && x.report().ultraspecial;
  }

  Outcome t1(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    const bool f = is_F_group(a.prof()).holds;
    const auto strict = is_strict_center_partition(a.prof());
    const std::size_t rank = poset_rank(a.prof());
    Detail d;
    d.add("F_group", f).add("strict_partition", strict.strict).add("rank", rank);
    if (strict.doubly_covered) d.add("doubly_covered", *strict.doubly_covered);
    return verdict(f == strict.strict && f == (rank == 1), d);
  }

  Outcome t2(std::size_t i) {
    Analysis& a = *analyses_[i];
    Detail d;
    d.add("cent", a.prof().cent_count);
    bool ok = true, skipped = false;
    std::vector<std::string> partners;
    for (std::size_t j = 0; j < analyses_.size(); ++j) {
      if (j == i || !analyses_[j]) continue;
      const Iso r = isoclinic(i, j);
      if (r == Iso::Budget) skipped = true;
      if (r != Iso::Yes) continue;
      const std::size_t other = analyses_[j]->prof().cent_count;
      partners.push_back(analyses_[j]->group().name());
      if (other != a.prof().cent_count) {
        ok = false;
        d.note("partner " + analyses_[j]->group().name() + " has cent=" + std::to_string(other));
      }
    }
    std::string list;
    for (const auto& p : partners) list += (list.empty() ? "" : ",") + p;
    d.add("isoclinic_with", list.empty() ? "-" : list);
    if (!ok) return {Status::Violation, d.str()};
    if (skipped) return {Status::SkippedBudget, d.str()};
    if (partners.empty()) return {Status::HypothesisNotMet, "no isoclinic partner in corpus"};
    return {Status::Holds, d.str()};
  }

  Outcome t3(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    // in a non-abelian group an abelian subgroup of prime index is a centralizer
    std::vector<std::uint64_t> primes;
    const auto& p = a.prof();
    for (std::size_t i = 0; i < p.proper_centralizers.size(); ++i) {
      const std::size_t idx = p.index(i);
      if (is_prime(idx) && p.centralizer_is_abelian(i) && is_normal(a.group(), p.proper_centralizers[i]) &&
          std::find(primes.begin(), primes.end(), idx) == primes.end())
        primes.push_back(idx);
    }
    if (primes.empty()) return unmet("no abelian normal subgroup of prime index");
    std::sort(primes.begin(), primes.end());
    Detail d;
    d.add("order", a.group().order()).add("center", p.center.size()).add("derived", a.derived().size());
    bool ok = true;
    for (std::uint64_t q : primes) {
      d.add("p", q);
      ok = ok && a.group().order() == q * p.center.size() * a.derived().size();
    }
    return verdict(ok, d);
  }

  Outcome t4(Analysis& a) {
    const bool lhs = a.prof().cent_count == a.center_index();
    const bool rhs = a.all_quotients_equal(2);
    Detail d;
    d.add("cent", a.prof().cent_count).add("index", a.center_index()).add("all_Zx_over_Z_two", rhs);
    if (lhs && !rhs) d.note("forward direction fails");
    if (!lhs && rhs) d.note("converse direction fails");
    return verdict(lhs == rhs, d);
  }

  Outcome t5(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    const bool cent_eq = a.prof().cent_count == a.center_index();
    const bool z_eq = a.zp().zclass_count() == a.center_index();
    const bool f = is_F_group(a.prof()).holds;
    const bool two = a.all_quotients_equal(2);
    const bool elem2 = a.quotient_elementary_prime() == 2u;
    Detail d;
    d.add("cent", a.prof().cent_count).add("zclass", a.zp().zclass_count()).add("index", a.center_index());
    bool ok = true;
    auto part = [&](const char* name, bool good) {
      d.add(name, good ? "ok" : "fails");
      ok = ok && good;
    };
    part("a", !cent_eq || f);
    part("b", !cent_eq || elem2);
    part("c", z_eq == two);
    if (z_eq && !two) d.note("c forward direction fails");
    if (!z_eq && two) d.note("c converse direction fails");
    part("d", !z_eq || f);
    return verdict(ok, d);
  }

  Outcome t6(std::size_t i) {
    Analysis& a = *analyses_[i];
    if (a.abelian()) return unmet("G is abelian");
    const std::uint64_t p = smallest_prime_divisor(a.group().order());
    const std::size_t cent = a.prof().cent_count;
    Detail d;
    d.add("p", p).add("cent", cent).add("index", a.center_index());
    bool ok = true, skipped = false;

    // (a) lower bound, equality, and the isoclinism branch
    const bool lower = p + 2 <= cent;
    const bool eq_a = cent == p + 2;
    const bool cpcp = a.center_index() == p * p && a.quotient_elementary_prime() == p;
    const Iso iso_a = isoclinic(a.group(), construct_extraspecial(static_cast<unsigned>(p), 1, Variant::Plus));
    d.add("lower_bound", lower).add("GZ_CpxCp", cpcp);
    ok = ok && lower && eq_a == cpcp;
    if (iso_a == Iso::Budget) {
      skipped = true;
      d.note("isoclinism to extraspecial p^3 over budget");
    } else {
      d.add("isoclinic_extraspecial_p3", iso_a == Iso::Yes);
      ok = ok && eq_a == (iso_a == Iso::Yes);
    }

    // (b) upper bound and equality
    const bool upper = cent <= a.center_index();
    const bool eq_b = cent == a.center_index();
    const bool two = a.all_quotients_equal(2);
    d.add("upper_bound", upper).add("all_Zx_over_Z_two", two);
    ok = ok && upper && eq_b == two;
    if (eq_b) {
      // equality forces isoclinism to a special 2-group; only this direction is asserted
      const Iso found = isoclinic_to_special_2_group(i);
      if (found == Iso::Budget) {
        skipped = true;
        d.note("isoclinism to special 2-group over budget");
      } else {
        d.add("isoclinic_special_2", found == Iso::Yes);
        ok = ok && found == Iso::Yes;
      }
    }
    else if (special_2_group(a.group()))
      d.note("finding: special 2-group with cent below |G/Z(G)|, so the converse of the isoclinism branch fails");
    if (!ok) return {Status::Violation, d.str()};
    if (skipped) return {Status::SkippedBudget, d.str()};
    return {Status::Holds, d.str()};
  }

  static bool special_2_group(const Group& g) { return p_group_prime(g) == 2u && is_special_p(g); }

  Iso isoclinic_to_special_2_group(std::size_t i) {
    Analysis& a = *analyses_[i];
    if (special_2_group(a.group())) return Iso::Yes;
    bool budget = false;
    const Group stem = stem_reduction(a.group());
    if (special_2_group(stem)) {
      const Iso r = isoclinic(a.group(), stem);
      if (r == Iso::Yes) return r;
      budget = budget || r == Iso::Budget;
    }
    for (std::size_t j : corpus_where(i, [](Analysis& x) { return special_2_group(x.group()); })) {
      const Iso r = isoclinic(i, j);
      if (r == Iso::Yes) return r;
      budget = budget || r == Iso::Budget;
    }
    return budget ? Iso::Budget : Iso::No;
  }

  Outcome t7(Analysis& a) {
    const auto f = count_by_formula_f1(a.prof());
    if (!f.applicable) return unmet(f.unmet);
    Detail d;
    d.add("p", f.p).add("k", f.k).add("m", f.m).add("formula", f.value).add("cent", a.prof().cent_count);
    if (!f.integral) d.note("formula not integral");
    return verdict(f.integral && f.value == static_cast<std::int64_t>(a.prof().cent_count), d);
  }

  Outcome t8(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    const auto pk = as_prime_power(a.center_index());
    if (!pk) return unmet("|G/Z(G)| = " + std::to_string(a.center_index()) + " is not a prime power");
    const bool lhs = a.all_quotients_equal(pk->p);
    const bool f = is_F_group(a.prof()).holds;
    const bool exp_p = exponent(a.central_quotient()) == pk->p;
    const bool count = a.prof().cent_count == geometric(pk->p, pk->k);
    Detail d;
    d.add("p", pk->p).add("k", pk->k).add("all_Zx_over_Z_p", lhs).add("F_group", f).add("GZ_exponent_p", exp_p);
    d.add("count_matches", count);
    const bool rhs = f && exp_p && count;
    if (lhs && !rhs) d.note("forward direction fails");
    if (!lhs && rhs) d.note("converse direction fails");
    return verdict(lhs == rhs, d);
  }

  Outcome t9(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    const auto pk = as_prime_power(a.center_index());
    if (!pk || pk->k != 4) return unmet("|G/Z(G)| is not p^4");
    if (!is_F_group(a.prof()).holds) return unmet("G is not an F-group");
    if (is_CA_group(a.prof())) return unmet("G is a CA-group");
    const std::uint64_t p = pk->p;
    const std::uint64_t want = p * p * p + p * p + p + 2;
    Detail d;
    d.add("p", p).add("cent", a.prof().cent_count).add("formula", want);
    return verdict(a.prof().cent_count == want, d);
  }

  /// p when G has conjugate type (p^e, 1) for the given e.
  static std::optional<std::uint64_t> uniform_prime_index(Analysis& a, unsigned e) {
    if (a.abelian()) return std::nullopt;
    const auto t = conjugate_type(a.prof());
    if (!t.uniform()) return std::nullopt;
    const auto pk = as_prime_power(t.index());
    if (!pk || pk->k != e) return std::nullopt;
    return pk->p;
  }

  Outcome t10(Analysis& a) {
    const auto p = uniform_prime_index(a, 1);
    if (!p) return unmet("conjugate type is not (p,1)");
    const bool elem = a.quotient_elementary_prime() == *p;
    const auto pk = as_prime_power(a.center_index());
    const unsigned k = pk ? pk->k : 0;
    Detail d;
    d.add("p", *p).add("k", k).add("GZ_elementary", elem);
    if (!elem) return verdict(false, d);
    const std::uint64_t want = geometric(*p, k);
    const auto& pr = a.prof();
    const std::size_t z = a.zp().zclass_count();
    d.add("cent", pr.cent_count).add("zclass", z).add("formula", want).add("nacent", pr.nacent_count);
    const bool b = pr.cent_count == want && z == want;
    const bool c = (pr.nacent_count == 1) == (k == 2);
    const bool dd = (pr.nacent_count == pr.cent_count) == (k > 2);
    if (!c) d.note("nacent=1 criterion fails");
    if (!dd) d.note("nacent=cent criterion fails");
    return verdict(b && c && dd, d);
  }

  Outcome t11(Analysis& a) {
    const auto p = p_group_prime(a.group());
    if (!p || a.abelian() || !a.report().extraspecial) return unmet("G is not extraspecial");
    const auto pk = as_prime_power(a.group().order());
    const unsigned aa = (pk->k - 1) / 2;
    const std::uint64_t want = geometric(*p, 2 * aa);
    Detail d;
    d.add("p", *p).add("a", aa).add("cent", a.prof().cent_count).add("zclass", a.zp().zclass_count());
    d.add("formula", want);
    return verdict(a.prof().cent_count == want && a.zp().zclass_count() == want, d);
  }

  Outcome t12(Analysis& a) {
    const auto p = uniform_prime_index(a, 2);
    if (!p) return unmet("conjugate type is not (p^2,1)");
    const Group& q = a.central_quotient();
    const bool first = a.quotient_elementary_prime() == *p;
    const bool second = *p % 2 == 1 && !q.is_abelian() && q.order() == *p * *p * *p && exponent(q) == *p &&
                        a.prof().cent_count == *p * *p + *p + 2;
    Detail d;
    d.add("p", *p).add("GZ_order", q.order()).add("GZ_elementary", first).add("nonabelian_branch", second);
    d.add("cent", a.prof().cent_count);
    return verdict(first || second, d);
  }

  Outcome t13(Analysis& a) {
    const auto f = count_by_formula_pp1(a.prof());
    const bool p2_type = uniform_prime_index(a, 2).has_value();
    if (!f.applicable) {
      if (p2_type) return {Status::Violation, "conjugate type (p^2,1) but formula gate fails: " + f.unmet};
      return unmet(f.unmet);
    }
    Detail d;
    d.add("p", f.p).add("k", f.k).add("v", f.v).add("formula", f.value).add("cent", a.prof().cent_count);
    if (p2_type) d.note("conjugate type (p^2,1)");
    return verdict(f.value == static_cast<std::int64_t>(a.prof().cent_count), d);
  }

  Outcome t14(std::size_t i) {
    Analysis& a = *analyses_[i];
    if (a.abelian()) return unmet("G is abelian");
    const std::size_t cent = a.prof().cent_count;
    const auto pk = cent > 2 ? as_prime_power(cent - 2) : std::nullopt;
    if (!pk || pk->k != 2) {
      const auto e = a.quotient_elementary_prime();
      if (e && a.center_index() == ipow(*e, 4) && is_F_group(a.prof()).holds)
        return unmet("G/Z(G) = C_p^4 F-group but cent=" + std::to_string(cent) + " is not p^2+2");
      return unmet("cent=" + std::to_string(cent) + " is not p^2+2");
    }
    const std::uint64_t p = pk->p;
    const bool lhs = uniform_prime_index(a, 2) == p;
    const bool rhs = a.quotient_elementary_prime() == p && a.center_index() == ipow(p, 4) &&
                     is_F_group(a.prof()).holds;
    Detail d;
    d.add("p", p).add("cent", cent).add("type_p2", lhs).add("GZ_Cp4_F", rhs);
    bool ok = lhs == rhs, skipped = false;

    const std::uint64_t order = ipow(p, 6);
    const auto candidates = corpus_where(i, [order](Analysis& x) { return is_ultraspecial_of_order(x, order); });
    bool self = is_ultraspecial_of_order(a, order);
    if (!self && candidates.empty()) {
      d.note("ultraspecial p^6 comparison unresolved: no such group in corpus");
    } else {
      Iso iso = self ? Iso::Yes : Iso::No;
      for (std::size_t j : candidates) {
        if (iso == Iso::Yes) break;
        const Iso r = isoclinic(i, j);
        if (r == Iso::Yes || r == Iso::Budget) iso = r;
      }
      if (iso == Iso::Budget) {
        skipped = true;
      } else {
        d.add("isoclinic_ultraspecial_p6", iso == Iso::Yes);
        ok = ok && lhs == (iso == Iso::Yes);
      }
    }
    if (!ok) return {Status::Violation, d.str()};
    if (skipped) return {Status::SkippedBudget, d.str()};
    return {Status::Holds, d.str()};
  }

  Outcome t15(std::size_t i) {
    Analysis& a = *analyses_[i];
    if (a.center_index() != 16) return unmet("|G/Z(G)| = " + std::to_string(a.center_index()) + " is not 16");
    const auto candidates = corpus_where(i, [](Analysis& x) { return is_ultraspecial_of_order(x, 64); });
    const bool self = is_ultraspecial_of_order(a, 64);
    if (!self && candidates.empty()) return unmet("no ultraspecial group of order 64 in corpus");
    Iso iso = self ? Iso::Yes : Iso::No;
    for (std::size_t j : candidates) {
      if (iso == Iso::Yes) break;
      const Iso r = isoclinic(i, j);
      if (r == Iso::Yes || r == Iso::Budget) iso = r;
    }
    const bool lhs = a.prof().cent_count == 6;
    Detail d;
    d.add("cent", a.prof().cent_count);
    if (iso == Iso::Budget) return {Status::SkippedBudget, d.str()};
    d.add("isoclinic_ultraspecial_64", iso == Iso::Yes);
    return verdict(lhs == (iso == Iso::Yes), d);
  }

  Outcome t16(Analysis& a) {
    if (a.abelian()) return unmet("G is abelian");
    if (!a.report().all_centralizers_maximal) return unmet("some centralizer is not maximal");
    const auto& pr = a.prof();
    Detail d;
    d.add("cent", pr.cent_count).add("zclass", a.zp().zclass_count()).add("nacent", pr.nacent_count);
    if (a.report().nilpotent) {
      const auto pk = as_prime_power(a.center_index());
      d.add("branch", "nilpotent");
      if (!pk) return verdict(false, d.note("|G/Z(G)| is not a prime power"));
      const std::uint64_t want = geometric(pk->p, pk->k);
      d.add("p", pk->p).add("k", pk->k).add("formula", want);
      const bool counts = pr.cent_count == want && a.zp().zclass_count() == want;
      const bool c = (pr.nacent_count == 1) == (pk->k == 2 && a.quotient_elementary_prime() == pk->p);
      const bool dd = (pr.nacent_count == pr.cent_count) == (pk->k > 2);
      return verdict(counts && c && dd, d);
    }
    d.add("branch", "non-nilpotent");
    const Group& q = a.central_quotient();
    if (q.is_abelian())
      return unmet(d.note("finding: G/Z(G) is abelian, contrary to the structure claimed for this case").str());
    const auto pa = normal_sylow_order(q);
    const std::size_t qcent = profile(q).cent_count;
    const bool ca = is_CA_group(pr);
    d.add("cent_GZ", qcent).add("p^a", pa ? std::to_string(*pa) : "-").add("CA", ca);
    return verdict(pa && pr.cent_count == qcent && qcent == *pa + 2 && ca, d);
  }

  Outcome t17(Analysis& a) {
    const auto r = check_max_zclass_characterization(a.group(), a.prof(), a.zp());
    switch (r.status) {
      case CheckStatus::Holds: return {Status::Holds, r.detail};
      case CheckStatus::Violation: return {Status::Violation, r.detail};
      case CheckStatus::HypothesisNotMet: break;
    }
    return unmet(r.detail);
  }

  Outcome t18(Analysis& a) {
    const std::size_t dsize = a.derived().size();
    if (!is_prime(dsize) || !a.derived().subset_of(a.prof().center)) return unmet("G' is not central of prime order");
    const std::uint64_t p = dsize;
    Detail d;
    d.add("p", p).add("index", a.center_index());
    ExtraspecialMatch m;
    try {
      m = isoclinic_to_extraspecial(a.group(), budget_);
    } catch (const SearchBudgetExceeded&) {
      return {Status::SkippedBudget, d.note("isoclinism over budget").str()};
    }
    if (!m.matches || m.p != p) return verdict(false, d.note("not isoclinic to an extraspecial p-group: " + m.reason));
    const std::uint64_t want = geometric(p, 2 * m.a);
    d.add("a", m.a).add("variant", *m.variant == Variant::Plus ? "+" : "-");
    d.add("cent", a.prof().cent_count).add("zclass", a.zp().zclass_count()).add("formula", want);
    return verdict(a.prof().cent_count == want && a.zp().zclass_count() == want, d);
  }

  const std::vector<CorpusEntry>& corpus_;
  std::uint64_t budget_;
  std::vector<std::unique_ptr<Analysis>> analyses_;
  std::map<std::pair<std::size_t, std::size_t>, Iso> pairs_;
};

}  // namespace

RunReport run(const std::vector<CorpusEntry>& corpus, const HarnessOptions& options) {
  std::vector<std::string> ids = options.theorems;
  if (ids.empty()) {
    ids = theorem_ids();
    ids.emplace_back("ASSERT");
  }
  Runner runner(corpus, options.budget);
  RunReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusEntry& e = corpus[i];
    if (!e.group) {
      report.outcomes.push_back({"LOAD", e.source, Status::Error, e.error});
      continue;
    }
    for (const auto& id : ids) {
      if (id == "ASSERT" && e.assertions.empty()) continue;
      TheoremOutcome o{id, e.group->name(), Status::Holds, {}};
      try {
        const Outcome r = id == "ASSERT" ? runner.assertions(i) : runner.check(theorem_number(id), i);
        o.status = r.status;
        o.detail = r.detail;
      } catch (const std::exception& ex) {
        o.status = Status::Error;
        o.detail = ex.what();
      }
      report.outcomes.push_back(std::move(o));
    }
  }
  return report;
}

std::string format_records(const RunReport& r) {
  std::string out;
  for (const auto& o : r.outcomes) {
    nlohmann::ordered_json j;
    j["theorem"] = o.theorem_id;
    j["group"] = o.group;
    j["status"] = to_string(o.status);
    j["detail"] = o.detail;
    out += j.dump() + '\n';
  }
  return out;
}

std::string format_table(const RunReport& r) {
  std::size_t wt = 7, wg = 5, ws = 6;
  for (const auto& o : r.outcomes) {
    wt = std::max(wt, o.theorem_id.size());
    wg = std::max(wg, o.group.size());
    ws = std::max(ws, to_string(o.status).size());
  }
  std::ostringstream os;
  auto row = [&](std::string_view t, std::string_view g, std::string_view s, std::string_view d) {
    os << t << std::string(wt - t.size() + 2, ' ') << g << std::string(wg - g.size() + 2, ' ') << s
       << std::string(ws - s.size() + 2, ' ') << d << '\n';
  };
  row("THEOREM", "GROUP", "STATUS", "DETAIL");
  for (const auto& o : r.outcomes) row(o.theorem_id, o.group, to_string(o.status), o.detail);
  os << "holds=" << r.count(Status::Holds) << " unmet=" << r.count(Status::HypothesisNotMet)
     << " violations=" << r.count(Status::Violation) << " skipped=" << r.count(Status::SkippedBudget)
     << " errors=" << r.count(Status::Error) << '\n';
  return os.str();
}

Record analysis_record(const Group& g, bool detailed) {
  const auto prof = profile(g);
  const auto z = z_partition(g, prof);
  const auto rep = classify(g, prof, z);
  const Group q = quotient(g, prof.center);
  const auto elem = elementary_abelian_prime(q);
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };

  Record r;
  auto put = [&](std::string key, std::string value) { r.emplace_back(std::move(key), std::move(value)); };
  put("name", g.name());
  put("order", std::to_string(g.order()));
  put("abelian", yes(rep.abelian));
  put("nilpotent", yes(rep.nilpotent));
  put("nilpotency_class", opt(rep.nilpotency_class));
  put("exponent", std::to_string(exponent(g)));
  put("center_order", std::to_string(prof.center.size()));
  put("commutator_order", std::to_string(commutator_subgroup(g).size()));
  put("central_quotient_order", std::to_string(q.order()));
  put("central_quotient_exponent", std::to_string(exponent(q)));
  put("central_quotient_elementary_abelian", yes(elem.has_value()));
  put("cent_count", std::to_string(prof.cent_count));
  put("proper_centralizer_count", std::to_string(prof.proper_centralizers.size()));
  put("rank", std::to_string(prof.rank));
  put("nacent_count", std::to_string(prof.nacent_count));
  put("zclass_count", std::to_string(z.zclass_count()));
  put("F_group", yes(rep.F_group));
  put("CA_group", yes(rep.CA_group));
  put("I_group", yes(rep.I_group));
  put("conjugate_type", rep.conjugate_type ? rep.conjugate_type->to_string() : "none");
  put("p", opt(rep.p));
  put("k", opt(rep.k));
  put("m", opt(rep.m));
  put("v", std::to_string(rep.v));
  put("special_p", yes(rep.special_p));
  put("extraspecial", yes(rep.extraspecial));
  put("semi_extraspecial", yes(rep.semi_extraspecial));
  put("ultraspecial", yes(rep.ultraspecial));
  put("camina_group", yes(rep.camina_group));
  put("minimal_nonabelian", yes(rep.minimal_nonabelian));
  put("all_centralizers_maximal", yes(rep.all_centralizers_maximal));
  put("chain_violations", std::to_string(rep.chain_violations.size()));
  if (detailed) {
    for (std::size_t i = 0; i < prof.proper_centralizers.size(); ++i) {
      std::ostringstream os;
      os << "owner=" << prof.owners[i] << " order=" << prof.proper_centralizers[i].size()
         << " index=" << prof.index(i) << " Zx_over_Z=" << prof.center_quotient_size(i)
         << " abelian=" << yes(prof.centralizer_is_abelian(i));
      put("centralizer." + std::to_string(i), os.str());
    }
    for (std::size_t i = 0; i < z.classes.size(); ++i) {
      const auto& c = z.classes[i];
      std::ostringstream os;
      os << "rep=" << c.representative << " size=" << c.members.size() << " normalizer_index=" << c.normalizer_index
         << " fprime=" << c.fprime_size;
      put("zclass." + std::to_string(i), os.str());
    }
  }
  return r;
}

std::string format_record_lines(const Record& r) {
  std::string out;
  for (const auto& [k, v] : r) out += k + ' ' + v + '\n';
  return out;
}

std::string format_record_table(const Record& r) {
  std::size_t w = 0;
  for (const auto& kv : r) w = std::max(w, kv.first.size());
  std::string out;
  for (const auto& [k, v] : r) out += k + std::string(w - k.size() + 2, ' ') + v + '\n';
  return out;
}

}  // namespace centra
