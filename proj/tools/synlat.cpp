// synlat: canonical automata and syntactic algebras of a regular language.
//
//   synlat automaton  --regex 'a+b+' --alphabet ab --level dfa|meet|lattice --format dot|json|table
//   synlat algebra    --regex 'a+b+' --alphabet ab --level monoid|semiring|lattice --format dot|json|table
//   synlat reversible --regex 'a+b+' --alphabet ab
//
// Exit status: 0 ok, 2 parse error, 3 budget exceeded, 4 internal inconsistency.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "synlat/atoms.hpp"
#include "synlat/canonical.hpp"
#include "synlat/error.hpp"
#include "synlat/regex.hpp"
#include "synlat/render.hpp"
#include "synlat/reversibility.hpp"
#include "synlat/syntactic.hpp"

namespace {

enum Exit { kOk = 0, kParse = 2, kBudget = 3, kInconsistent = 4 };

struct RunConfig {
  std::string regex;
  std::string alphabet;
  std::string level;
  std::string format = "table";
  bool suppress_derivable_columns = false;
  synlat::Budgets budgets;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--regex", cfg.regex, "regular expression (| * + ? ( ) %e %0)")->required();
  cmd->add_option("--alphabet", cfg.alphabet, "letters, e.g. ab")->required();
  cmd->add_option("--budget-states", cfg.budgets.states)->check(CLI::PositiveNumber);
  cmd->add_option("--budget-profiles", cfg.budgets.profiles)->check(CLI::PositiveNumber);
  cmd->add_option("--budget-elements", cfg.budgets.elements)->check(CLI::PositiveNumber);
  cmd->add_option("--budget-table-cells", cfg.budgets.table_cells)->check(CLI::PositiveNumber);
  cmd->add_option("--budget-quadruples", cfg.budgets.quadruples)->check(CLI::PositiveNumber);
}

std::string run_automaton(const RunConfig& cfg, const synlat::ProfileTable& pt) {
  using namespace synlat;
  render::Document doc;
  std::size_t initial = index(pt.base().initial);
  if (cfg.level == "dfa") {
    doc = render::dfa_document(pt, cfg.regex);
  } else {
    auto a = cfg.level == "meet" ? build_meet_automaton(pt, pt.base(), cfg.budgets.elements)
                                 : build_lattice_automaton(pt, pt.base(), cfg.budgets.elements);
    doc = render::automaton_document(pt, a, cfg.regex, cfg.level);
    initial = a.initial;
  }
  if (cfg.format == "json") return render::to_json_text(doc);
  if (cfg.format == "dot") return render::to_dot(doc, initial);
  return render::automaton_table(doc);
}

std::string run_algebra(const RunConfig& cfg, const synlat::ProfileTable& pt) {
  using namespace synlat;
  const Dfa& dfa = pt.base();
  if (cfg.level == "monoid") {
    auto m = syntactic_monoid(dfa, cfg.budgets);
    auto doc = render::monoid_document(pt, m, cfg.regex);
    if (cfg.format == "json") return render::to_json_text(doc);
    if (cfg.format == "dot") {
      for (std::size_t e = 0; e < m.size(); ++e)
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
          doc.transitions.push_back({e, std::string(1, dfa.alphabet.letter(a)), m.multiply(e, m.generators[a])});
      return render::elements_to_dot(doc);
    }
    return render::monoid_table(pt, m);
  }
  if (cfg.level == "semiring") {
    auto s = syntactic_semiring(pt, dfa, cfg.budgets);
    if (cfg.format == "json") return render::to_json_text(render::semiring_document(s, cfg.regex));
    if (cfg.format == "dot") return render::elements_to_dot(render::semiring_document(s, cfg.regex));
    return render::semiring_table(s, build_meet_automaton(pt, dfa, cfg.budgets.elements),
                                  cfg.suppress_derivable_columns);
  }
  auto a = syntactic_lattice_algebra(pt, dfa, cfg.budgets);
  if (cfg.format == "json") return render::to_json_text(render::lattice_document(a, cfg.regex));
  if (cfg.format == "dot") return render::elements_to_dot(render::lattice_document(a, cfg.regex));
  return render::lattice_table(a, build_lattice_automaton(pt, dfa, cfg.budgets.elements),
                               cfg.suppress_derivable_columns);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical automata and syntactic algebras of regular languages"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* automaton = app.add_subcommand("automaton", "canonical, meet or lattice automaton");
  add_common(automaton, cfg);
  cfg.level = "dfa";
  automaton->add_option("--level", cfg.level)->check(CLI::IsMember({"dfa", "meet", "lattice"}));
  automaton->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json", "table"}));

  auto* algebra = app.add_subcommand("algebra", "syntactic monoid, semiring or lattice algebra");
  add_common(algebra, cfg);
  algebra->add_option("--level", cfg.level)->check(CLI::IsMember({"monoid", "semiring", "lattice"}));
  algebra->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json", "table"}));
  algebra->add_flag("--suppress-derivable-columns", cfg.suppress_derivable_columns,
                    "table: show only residuals other than the empty set and A*");

  auto* reversible = app.add_subcommand("reversible", "reversibility verdict (JSON)");
  add_common(reversible, cfg);
  reversible->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (algebra->parsed() && cfg.level == "dfa") cfg.level = "monoid";

  try {
    synlat::Alphabet alphabet(cfg.alphabet);
    auto dfa = synlat::compile_canonical_dfa(synlat::parse_regex(cfg.regex, alphabet), cfg.budgets.states);
    if (reversible->parsed()) {
      const double m = static_cast<double>(synlat::syntactic_monoid(dfa, cfg.budgets).size());
      if (m * m * m * m > 1e6)
        std::cerr << "synlat: warning: identity check over " << static_cast<unsigned long long>(m * m * m * m)
                  << " quadruples\n";
      auto report = synlat::is_reversible(dfa, cfg.budgets);
      std::cout << synlat::render::verdict_json(dfa, report, cfg.regex).dump(2) << "\n";
      return kOk;
    }
    auto pt = synlat::build_profile_table(dfa, cfg.budgets.profiles);
    std::cout << (automaton->parsed() ? run_automaton(cfg, pt) : run_algebra(cfg, pt));
    return kOk;
  } catch (const synlat::ParseError& e) {
    std::cerr << "synlat: parse error at " << e.position() << ": " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "synlat: " << e.what() << "\n";
    return kParse;
  } catch (const synlat::BudgetExceeded& e) {
    std::cerr << "synlat: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const synlat::InconsistencyError& e) {
    std::cerr << "synlat: internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
}
