// twochar: command-line front end for the 2-representation library.
//
// Exit codes: 0 ok, 1 a check failed, 2 invalid input, 3 input cochain is
// not a cocycle, 4 a size or search cap was hit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twochar/character.hpp"
#include "twochar/error.hpp"
#include "twochar/io.hpp"

using namespace twochar;
using io::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kNotCocycle = 3, kCap = 4 };

struct Options {
  std::string format = "json";
  std::string out;
  std::size_t cap = 0; // 0: library default
};

void emit(const Options &opt, const json &j, const std::string &text) {
  std::string body = opt.format == "text" ? text : j.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.out);
  if (!f)
    throw ValidationError("cannot write '" + opt.out + "'");
  f << body;
}

GroupPtr load_group(const std::string &spec) {
  if (std::filesystem::is_regular_file(spec))
    return io::group_from_json(io::read_json_file(spec));
  return std::make_shared<const PermGroup>(named_group(spec));
}

TwoRep load_rep(const std::string &path, const GroupPtr &fallback = nullptr) {
  return io::rep_from_json(io::read_json_file(path), fallback);
}

std::string join_divisors(const std::vector<std::int64_t> &d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i)
    os << (i ? ", " : "") << d[i];
  os << "]";
  return os.str();
}

// ------------------------------------------------------------- commands

int cmd_group(const Options &opt, const std::string &named, const std::string &file) {
  if (named.empty() == file.empty())
    throw ValidationError("give exactly one of --named or a group file");
  GroupPtr g = named.empty() ? io::group_from_json(io::read_json_file(file))
                             : std::make_shared<const PermGroup>(named_group(named));
  auto classes = g->conjugacy_classes().size();
  auto pairs = commuting_pairs(*g).size();
  auto pair_classes = simultaneous_pair_classes(*g).size();
  json j{{"group", io::group_to_json(*g)},
         {"order", g->order()},
         {"conjugacy_classes", classes},
         {"commuting_pairs", pairs},
         {"pair_classes", pair_classes}};
  std::ostringstream os;
  os << "order: " << g->order() << "\nconjugacy classes: " << classes
     << "\ncommuting pairs: " << pairs << "\nsimultaneous pair classes: " << pair_classes << "\n";
  emit(opt, j, os.str());
  return kOk;
}

int cmd_chartable(const Options &opt, const std::string &rep_file, const std::string &named) {
  GroupPtr g = named.empty() ? nullptr : load_group(named);
  TwoRep r = load_rep(rep_file, g);
  auto t = character_table(r);
  json j = io::table_to_json(*r.group(), t);
  j["dimension"] = r.dim();
  emit(opt, j, io::table_to_text(*r.group(), t));
  return kOk;
}

int cmd_equiv(const Options &opt, const std::string &a_file, const std::string &b_file,
              const std::string &named) {
  GroupPtr g = named.empty() ? nullptr : load_group(named);
  TwoRep a = load_rep(a_file, g);
  TwoRep b = load_rep(b_file, g ? g : a.group());
  auto w = are_equivalent(a, b, opt.cap ? opt.cap : kDefaultEquivalenceCap);
  json j{{"equivalent", w.has_value()}};
  std::ostringstream os;
  os << "equivalent: " << (w ? "true" : "false") << "\n";
  if (w) {
    j["f"] = w->f.images();
    j["b"] = io::cochain1_to_json(w->b);
    os << "f: " << w->f.cycles() << "\n";
  }
  emit(opt, j, os.str());
  return kOk;
}

int cmd_induce(const Options &opt, const std::string &group, const std::string &subgroup,
               const std::string &rep_file) {
  GroupPtr g = load_group(group);
  Subgroup h = io::parse_subgroup(g, subgroup);
  auto hg = std::make_shared<const PermGroup>(h.as_group());
  TwoRep r_h = load_rep(rep_file, hg);
  TwoRep ind = induce(h, r_h);
  std::ostringstream os;
  os << "induced from a subgroup of order " << h.order() << " (index "
     << g->order() / h.order() << "): dimension " << ind.dim() << "\n";
  emit(opt, io::rep_to_json(ind), os.str());
  return kOk;
}

json subgroup_json(const Subgroup &h) {
  json members = json::array();
  for (Elem e : h.members())
    members.push_back(h.ambient()->element(e).cycles());
  return json{{"order", h.order()}, {"members", members}};
}

int cmd_decompose(const Options &opt, const std::string &rep_file, const std::string &named) {
  GroupPtr g = named.empty() ? nullptr : load_group(named);
  TwoRep r = load_rep(rep_file, g);
  auto parts = decompose(r);
  json factors = json::array();
  std::ostringstream os;
  TwoRep sum(make_gset(GSet::empty(r.group())));
  for (const auto &p : parts) {
    factors.push_back(json{{"subgroup", subgroup_json(p.subgroup)},
                           {"cocycle", io::cochain2_to_json(p.point_rep.cocycle())}});
    os << "orbit of size " << r.group()->order() / p.subgroup.order()
       << ", stabilizer of order " << p.subgroup.order()
       << (p.point_rep.cocycle().is_zero() ? ", zero cocycle" : ", nonzero cocycle") << "\n";
    sum = direct_sum(sum, induce(p.subgroup, p.point_rep));
  }
  bool round_trip = are_equivalent(r, sum, opt.cap ? opt.cap : kDefaultEquivalenceCap).has_value();
  os << "round trip equivalent: " << (round_trip ? "true" : "false") << "\n";
  emit(opt, json{{"factors", factors}, {"round_trip_equivalent", round_trip}}, os.str());
  return round_trip ? kOk : kCheckFailed;
}

int cmd_h2(const Options &opt, const std::string &group, bool point, bool regular,
           const std::string &cosets, const std::string &gset_file, std::int64_t modulus) {
  GroupPtr g = load_group(group);
  int chosen = int(point) + int(regular) + int(!cosets.empty()) + int(!gset_file.empty());
  if (chosen > 1)
    throw ValidationError("choose one of --point, --regular, --cosets, --gset");
  GSetPtr s;
  if (regular)
    s = make_gset(GSet::regular(g));
  else if (!cosets.empty())
    s = make_gset(GSet::coset_space(io::parse_subgroup(g, cosets)));
  else if (!gset_file.empty())
    s = io::gset_from_json(g, io::read_json_file(gset_file));
  else
    s = make_gset(GSet::trivial(g, 1));
  std::optional<std::int64_t> k;
  if (modulus > 0)
    k = modulus;
  auto h = h2_compute(s, k, opt.cap ? opt.cap : kDefaultCohomologyRowCap);
  json reps = json::array();
  for (const auto &c : h.representatives)
    reps.push_back(io::cochain2_to_json(c));
  json j{{"modulus", h.modulus},
         {"divisors", h.divisors},
         {"order", h.order()},
         {"representatives", reps}};
  std::ostringstream os;
  os << "modulus: " << h.modulus << "\ndivisors: " << join_divisors(h.divisors)
     << "\norder: " << h.order() << "\n";
  emit(opt, j, os.str());
  return kOk;
}

int cmd_paper_example(const Options &opt, std::size_t collision_n) {
  auto [rho, rho_prime] = sigma3_collision_pair();
  const PermGroup &g = *rho.group();
  bool non_equivalent = !are_equivalent(rho, rho_prime).has_value();
  auto t = character_table(rho), tp = character_table(rho_prime);
  bool tables_equal = t == tp;

  Elem rot = *g.find(Perm::from_cycles("(0 1 2)", 3));
  Elem rot_inv = g.inv(rot);
  bool values_ok = true;
  json chi_1 = json::object();
  for (const TwoRep *r : {&rho, &rho_prime}) {
    values_ok &= two_character(*r, 0, 0) == Cyclo::from_int(8);
    values_ok &= two_character(*r, rot, rot_inv) == Cyclo::from_int(2);
    for (Elem x = 1; x < g.order(); ++x)
      values_ok &= two_character(*r, 0, x) == Cyclo::from_int(2);
  }
  for (Elem x = 0; x < g.order(); ++x)
    chi_1[g.element(x).cycles()] = io::cyclo_to_json(two_character(rho, 0, x));

  json j{{"non_equivalent", non_equivalent},
         {"tables_equal", tables_equal},
         {"chi_1_1", io::cyclo_to_json(two_character(rho, 0, 0))},
         {"chi_1_g", chi_1},
         {"chi_rot_rotinv", io::cyclo_to_json(two_character(rho, rot, rot_inv))},
         {"table", io::table_to_json(g, t)}};
  std::ostringstream os;
  os << "non-equivalent: " << (non_equivalent ? "true" : "false")
     << "; tables equal: " << (tables_equal ? "true" : "false")
     << "; chi(1,1)=" << two_character(rho, 0, 0).to_string()
     << "; chi(1,.)=" << two_character(rho, 0, 1).to_string()
     << "; chi((012),(021))=" << two_character(rho, rot, rot_inv).to_string() << "\n";
  bool passed = non_equivalent && tables_equal && values_ok;

  if (collision_n > 0) {
    auto gp = rho.group();
    auto found = collision_search(gp, collision_n, opt.cap ? opt.cap : kDefaultCollisionCap);
    bool contains = false;
    json pairs = json::array();
    for (const auto &c : found) {
      pairs.push_back(json{{"left", c.left}, {"right", c.right}});
      bool match = (are_equivalent(c.left_rep, rho) && are_equivalent(c.right_rep, rho_prime)) ||
                   (are_equivalent(c.left_rep, rho_prime) && are_equivalent(c.right_rep, rho));
      contains |= match;
    }
    j["collision_search"] = json{{"dimension", collision_n},
                                 {"pairs", pairs},
                                 {"contains_pair", contains}};
    os << "collision search in dimension " << collision_n << ": " << found.size()
       << " pair(s), contains the example: " << (contains ? "true" : "false") << "\n";
    if (collision_n == 8)
      passed &= contains;
  }
  j["passed"] = passed;
  emit(opt, j, os.str());
  return passed ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations with 2-representations of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write output to this path");
  app.add_option("--cap", opt.cap, "Search/size cap (0 = default)");

  std::string named, file, rep_a, rep_b, group, subgroup, cosets, gset_file;
  bool point = false, regular = false;
  std::int64_t modulus = 0;
  std::size_t collision_n = 0;

  auto *group_cmd = app.add_subcommand("group", "Group statistics");
  group_cmd->add_option("--named", named, "Named group, e.g. symmetric:3");
  group_cmd->add_option("file", file, "Group JSON file");

  auto *chartable = app.add_subcommand("chartable", "Character table of a representation");
  chartable->add_option("rep", rep_a, "Representation JSON")->required();
  chartable->add_option("--named", named, "Group for files without a \"group\" field");

  auto *equiv = app.add_subcommand("equiv", "Test two representations for equivalence");
  equiv->add_option("rep", rep_a)->required();
  equiv->add_option("other", rep_b)->required();
  equiv->add_option("--named", named, "Group for files without a \"group\" field");

  auto *induce_cmd = app.add_subcommand("induce", "Induce a representation from a subgroup");
  induce_cmd->add_option("--group", group, "Named group or group JSON file")->required();
  induce_cmd->add_option("--subgroup", subgroup, "Generators, e.g. \"(012)\" or \"(01);(23)\"")
      ->required();
  induce_cmd->add_option("--rep", rep_a, "Representation of the subgroup")->required();

  auto *decompose_cmd = app.add_subcommand("decompose", "Split into induced 1-dim pieces");
  decompose_cmd->add_option("rep", rep_a)->required();
  decompose_cmd->add_option("--named", named, "Group for files without a \"group\" field");

  auto *h2 = app.add_subcommand("h2", "H^2(G; (Q/Z)^S)");
  h2->add_option("--named,--group", group, "Named group or group JSON file")->required();
  h2->add_flag("--point", point, "S is a single point (default)");
  h2->add_flag("--regular", regular, "S = G");
  h2->add_option("--cosets", cosets, "S = G/H for the generated subgroup H");
  h2->add_option("--gset", gset_file, "G-set JSON file");
  h2->add_option("--modulus", modulus, "Only classes of (1/K)Z/Z-valued cocycles");

  auto *paper = app.add_subcommand("paper-example", "The S3 pair with equal characters");
  paper->add_option("--collision-search", collision_n, "Also search this dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*group_cmd)
      return cmd_group(opt, named, file);
    if (*chartable)
      return cmd_chartable(opt, rep_a, named);
    if (*equiv)
      return cmd_equiv(opt, rep_a, rep_b, named);
    if (*induce_cmd)
      return cmd_induce(opt, group, subgroup, rep_a);
    if (*decompose_cmd)
      return cmd_decompose(opt, rep_a, named);
    if (*h2)
      return cmd_h2(opt, group, point, regular, cosets, gset_file, modulus);
    if (*paper)
      return cmd_paper_example(opt, collision_n);
  } catch (const CocycleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCocycle;
  } catch (const ResourceError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
