#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "centra/catalog_io.hpp"
#include "centra/constructors.hpp"
#include "centra/errors.hpp"
#include "centra/group.hpp"
#include "centra/harness.hpp"
#include "centra/isoclinism.hpp"
#include "centra/zclass.hpp"

namespace {

constexpr int kExitNotIsoclinic = 1;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

/// A path when one exists, otherwise a constructor spec.
centra::Group load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return centra::read_group_file(arg);
  return centra::construct_from_spec(arg);
}

std::vector<centra::CorpusEntry> load_named_corpus(const std::string& name) {
  const std::filesystem::path path = name == "builtin" ? centra::builtin_manifest_path() : std::filesystem::path(name);
  return centra::load_corpus(centra::read_manifest(path));
}

void print_members(const std::vector<centra::Elem>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizers, z-classes and structure checks for finite groups given by Cayley tables"};
  app.require_subcommand(1);
  std::size_t order_cap = 0;
  app.add_option("--order-cap", order_cap, "Largest group order accepted (default 2048, env CENTRA_ORDER_CAP)");

  std::string format = "records";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "records or table")->check(CLI::IsMember({"records", "table"}));
  };
  std::uint64_t budget = centra::kDefaultSearchBudget;

  auto* analyze = app.add_subcommand("analyze", "Centralizer profile, z-classes and classification of one group");
  std::string analyze_input;
  analyze->add_option("group", analyze_input, "GRP or PERMGRP file, or constructor spec")->required();
  add_format(analyze);

  auto* construct = app.add_subcommand("construct", "Write a constructed group as a GRP file");
  std::string spec, out_path;
  construct->add_option("spec", spec, "e.g. extraspecial:p=3,a=1,variant=+")->required();
  construct->add_option("-o,--output", out_path, "Output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a corpus");
  std::string corpus = "builtin", theorems;
  verify->add_option("--corpus", corpus, "Manifest path or 'builtin'");
  verify->add_option("--theorem", theorems, "Selection such as T1,T4-T6,ASSERT");
  verify->add_option("--budget", budget, "Isoclinism search node budget");
  add_format(verify);

  auto* isoclinic = app.add_subcommand("isoclinic", "Search for an isoclinism between two groups");
  std::string iso_a, iso_b;
  isoclinic->add_option("a", iso_a, "First group")->required();
  isoclinic->add_option("b", iso_b, "Second group")->required();
  isoclinic->add_option("--budget", budget, "Search node budget");

  auto* zclasses = app.add_subcommand("zclasses", "List the z-class partition");
  std::string z_input;
  zclasses->add_option("group", z_input, "GRP or PERMGRP file, or constructor spec")->required();

  CLI11_PARSE(app, argc, argv);
  if (order_cap != 0) centra::set_order_cap(order_cap);

  try {
    if (*analyze) {
      const auto rec = centra::analysis_record(load_input(analyze_input), true);
      std::cout << (format == "table" ? centra::format_record_table(rec) : centra::format_record_lines(rec));
      return 0;
    }
    if (*construct) {
      const std::string text = centra::write_grp(centra::construct_from_spec(spec));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << text)) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kExitInput;
        }
      }
      return 0;
    }
    if (*verify) {
      centra::HarnessOptions opt;
      opt.budget = budget;
      if (!theorems.empty()) opt.theorems = centra::parse_theorem_selection(theorems);
      const auto report = centra::run(load_named_corpus(corpus), opt);
      std::cout << (format == "table" ? centra::format_table(report) : centra::format_records(report));
      return report.exit_code();
    }
    if (*isoclinic) {
      const centra::Group a = load_input(iso_a), b = load_input(iso_b);
      const auto r = centra::are_isoclinic(a, b, budget);
      if (!r.isoclinic()) {
        std::cout << "not isoclinic: " << r.reason << '\n';
        return kExitNotIsoclinic;
      }
      std::cout << "isoclinic (" << r.nodes << " search nodes)\nphi";
      for (std::size_t i = 0; i < r.witness->phi.size(); ++i) std::cout << ' ' << i << "->" << r.witness->phi[i];
      std::cout << "\ntheta";
      for (const auto& [c, d] : r.witness->theta) std::cout << ' ' << c << "->" << d;
      std::cout << '\n';
      return 0;
    }
    if (*zclasses) {
      const auto z = centra::z_partition(load_input(z_input));
      for (std::size_t i = 0; i < z.classes.size(); ++i) {
        const auto& c = z.classes[i];
        std::cout << "class " << i << " rep=" << c.representative << " size=" << c.members.size()
                  << " normalizer_index=" << c.normalizer_index << " fprime=" << c.fprime_size << " members=";
        print_members(c.members);
        std::cout << '\n';
      }
      std::cout << "zclass_count " << z.zclass_count() << '\n';
      return 0;
    }
  } catch (const centra::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const centra::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
