// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "centra/arith.hpp"
#include "centra/catalog_io.hpp"
#include "centra/centralizer.hpp"
#include "centra/classifier.hpp"
#include "centra/constructors.hpp"
#include "centra/group_ops.hpp"
#include "centra/harness.hpp"
#include "centra/isoclinism.hpp"
#include "centra/zclass.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

/// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

bool all_quotients(const CentralizerProfile& p, std::size_t q) {
  for (std::size_t i = 0; i < p.centers.size(); ++i)
    if (p.center_quotient_size(i) != q) return false;
  return true;
}

Status single_check(const Group& g, const std::string& id) {
  std::vector<CorpusEntry> corpus(1);
  corpus[0].source = g.name();
  corpus[0].group = g;
  HarnessOptions opts;
  opts.theorems = {id};
  const auto r = run(corpus, opts);
  return r.outcomes.at(0).status;
}

struct Shell {
  int code = -1;
  std::string out;
};

Shell shell(const std::string& cmd) {
  Shell r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 65536> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string num(std::size_t v) { return std::to_string(v); }

void c1(Check& c) {
  const Group d8 = construct_dihedral(8);
  const auto p = profile(d8);
  c.expect(p.cent_count == 4, "cent_count=" + num(p.cent_count));
  c.expect(p.center_index() == 4, "index=" + num(p.center_index()));
  c.expect(z_partition(d8, p).zclass_count() == 4, "zclass_count");
  c.expect(all_quotients(p, 2), "|Z(x)/Z| != 2");
  c.expect(single_check(d8, "T4") == Status::Holds, "T4 not HOLDS");
}

void c2(Check& c) {
  const Group d8 = construct_dihedral(8), q8 = construct_quaternion8();
  const auto p = profile(q8);
  c.expect(p.cent_count == 4 && p.center_index() == 4, "cent_count/index");
  c.expect(z_partition(q8, p).zclass_count() == 4, "zclass_count");
  c.expect(all_quotients(p, 2), "|Z(x)/Z| != 2");
  const auto r = are_isoclinic(d8, q8);
  c.expect(r.isoclinic() && verify_witness(d8, q8, *r.witness), "no verified isoclinism D8~Q8");
  c.expect(profile(d8).cent_count == p.cent_count, "cent counts differ");
}

void c3(Check& c) {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const Group g = construct_extraspecial(3, 1, v);
    const auto p = profile(g);
    const std::size_t want = (9 - 1) / (3 - 1) + 1;
    c.expect(p.cent_count == want, g.name() + " cent_count=" + num(p.cent_count));
    c.expect(z_partition(g, p).zclass_count() == want, g.name() + " zclass_count");
    c.expect(p.cent_count == 3 + 2, g.name() + " cent != p+2");
    const Group q = quotient(g, p.center);
    c.expect(q.order() == 9 && elementary_abelian_prime(q) == 3u, g.name() + " G/Z not C3xC3");
    c.expect(single_check(g, "T6") == Status::Holds, g.name() + " T6 not HOLDS");
  }
}

void c4(Check& c) {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const Group g = construct_extraspecial(2, 2, v);
    const auto p = profile(g);
    c.expect(p.cent_count == 16 && p.center_index() == 16, g.name() + " cent_count=" + num(p.cent_count));
    c.expect(z_partition(g, p).zclass_count() == 16, g.name() + " zclass_count");
    c.expect(all_quotients(p, 2), g.name() + " |Z(x)/Z| != 2");
    c.expect(is_special_p(g), g.name() + " not special");
    c.expect(single_check(g, "T6") == Status::Holds, g.name() + " T6 not HOLDS");
  }
  const Group a = construct_extraspecial(2, 2, Variant::Plus), b = construct_extraspecial(2, 2, Variant::Minus);
  const auto r = are_isoclinic(a, b);
  c.expect(r.isoclinic() && verify_witness(a, b, *r.witness), "variants not isoclinic");
}

void c5(Check& c) {
  const Group h = construct_heisenberg(3);
  const auto p = profile(h);
  c.expect(conjugate_type(p).to_string() == "(3,1)", "Heis(3) type " + conjugate_type(p).to_string());
  const Group q = quotient(h, p.center);
  c.expect(q.order() == 9 && elementary_abelian_prime(q) == 3u, "Heis(3) G/Z not C3xC3");
  c.expect(p.cent_count == 5 && z_partition(h, p).zclass_count() == 5, "Heis(3) counts");
  c.expect(p.nacent_count == 1, "Heis(3) nacent=" + num(p.nacent_count));
  c.expect(single_check(h, "T10") == Status::Holds, "Heis(3) T10 not HOLDS");
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const Group e = construct_extraspecial(3, 2, v);
    const auto pe = profile(e);
    c.expect(pe.cent_count == 41 && pe.nacent_count == 41, e.name() + " cent/nacent");
    c.expect(pe.center_index() == 81, e.name() + " index");
    c.expect(single_check(e, "T10") == Status::Holds, e.name() + " T10 not HOLDS");
  }
}

void c6(Check& c) {
  const Group s3 = construct_symmetric(3);
  const auto p = profile(s3);
  c.expect(p.cent_count == 5, "S3 cent_count=" + num(p.cent_count));
  c.expect(z_partition(s3, p).zclass_count() == 3, "S3 zclass_count");
  c.expect(all_centralizers_maximal(s3, p), "S3 centralizers not all maximal");
  c.expect(normal_sylow_order(quotient(s3, p.center)) == 3u && p.cent_count == 3 + 2, "S3 cent != p^a+2");
  c.expect(is_CA_group(p), "S3 not CA");
  c.expect(single_check(s3, "T16") == Status::Holds, "S3 T16 not HOLDS");
  const Group a4 = construct_alternating4();
  c.expect(profile(a4).cent_count == 6, "A4 cent_count");
  c.expect(z_partition(a4).zclass_count() == 3, "A4 zclass_count");
}

void c7(Check& c) {
  const Group g = read_group_file(builtin_manifest_path().parent_path() / "sg_64_73.permgrp");
  const auto p = profile(g);
  c.expect(g.order() == 64, "order");
  const Group q = quotient(g, p.center);
  c.expect(q.order() == 8 && elementary_abelian_prime(q) == 2u, "G/Z not C2^3");
  c.expect(conjugate_type(p).to_string() == "(4,1)", "type " + conjugate_type(p).to_string());
  const auto f = count_by_formula_pp1(p);
  c.expect(f.applicable && f.value == static_cast<std::int64_t>(p.cent_count),
           "counting formula " + std::to_string(f.value) + " vs cent " + num(p.cent_count) + " v=" + num(f.v));
  c.expect(single_check(g, "T13") == Status::Holds, "T13 not HOLDS");
}

void c8(Check& c) {
  auto corpus = load_corpus(read_manifest(builtin_manifest_path()));
  corpus.push_back({"heisenberg:p=3", construct_heisenberg(3), {}, {}});
  HarnessOptions opts;
  opts.theorems = {"T3"};
  const auto r = run(corpus, opts);
  std::size_t holds = 0;
  for (const auto& o : r.outcomes) {
    c.expect(o.status == Status::Holds || o.status == Status::HypothesisNotMet, "T3 " + o.group + " " + o.detail);
    if (o.status == Status::Holds) ++holds;
  }
  for (const char* name : {"D8", "Q8", "S3", "Heis(3)"}) {
    bool found = false;
    for (const auto& o : r.outcomes) found = found || (o.group == name && o.status == Status::Holds);
    c.expect(found, std::string("T3 not HOLDS on ") + name);
  }
  c.expect(holds >= 4, "T3 held on " + num(holds) + " groups");
}

void c9(Check& c) {
  const std::string cmd = std::string(CENTRA_CLI_PATH) + " verify --corpus builtin";
  const auto a = shell(cmd), b = shell(cmd);
  c.expect(a.code == 0 && b.code == 0, "exit codes " + std::to_string(a.code) + "," + std::to_string(b.code));
  c.expect(!a.out.empty() && a.out == b.out, "reports differ between runs");
  c.expect(a.out.find("\"VIOLATION\"") == std::string::npos, "VIOLATION present");
  c.expect(a.out.find("\"ERROR\"") == std::string::npos, "ERROR present");
  std::size_t lines = 0, t18 = 0;
  for (std::size_t i = 0; (i = a.out.find('\n', i)) != std::string::npos; ++i) ++lines;
  for (std::size_t i = 0; (i = a.out.find("\"theorem\":\"T18\"", i)) != std::string::npos; ++i) ++t18;
  c.expect(t18 >= 30, "only " + num(t18) + " groups checked");
  c.expect(lines >= 18 * 30, "only " + num(lines) + " outcomes");
}

void c10(Check& c) {
  for (const auto& e : load_corpus(read_manifest(builtin_manifest_path()))) {
    if (!e.group) {
      c.expect(false, "load " + e.source);
      continue;
    }
    const Group& g = *e.group;
    const auto p = profile(g);
    std::set<oracle::Set> lib;
    for (const auto& s : p.proper_centralizers) lib.insert(s.members());
    c.expect(lib == oracle::proper_centralizers(g), g.name() + " centralizers differ from oracle");
    c.expect(p.center.members() == oracle::center(g), g.name() + " center differs from oracle");
    const auto z = z_partition(g, p);
    std::vector<oracle::Set> classes;
    for (const auto& cl : z.classes) {
      classes.push_back(cl.members);
      c.expect(cl.size_formula_holds(), g.name() + " size formula fails");
    }
    c.expect(classes == oracle::zclasses(g), g.name() + " z-classes differ from oracle");
    c.expect(classify(g, p, z).chain_violations.empty(), g.name() + " implication chain violated");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double limit_s;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"D8 counts and |Z(x)/Z| = 2 in both directions", 1, c1},
      {"Q8 counts and isoclinism with D8", 1, c2},
      {"extraspecial 3^3 counts and equality branch", 1, c3},
      {"extraspecial 2^5 counts and equality branch", 5, c4},
      {"Heisenberg 3 type (3,1); extraspecial 3^5 nacent", 30, c5},
      {"S3 and A4 counts, maximal centralizers", 1, c6},
      {"fixture sg_64_73", 5, c7},
      {"abelian normal subgroup of prime index", 60, c8},
      {"full builtin verify twice, identical, no violations", 300, c9},
      {"oracle equivalence over the builtin corpus", 300, c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(s < cr.limit_s, "took longer than " + std::to_string(cr.limit_s) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << cr.title << " (" << s << " s)";
    if (!c.ok()) line << " -- " << c.summary();
    std::cout << line.str() << std::endl;
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
