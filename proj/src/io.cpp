#include "twochar/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "twochar/error.hpp"

namespace twochar::io {

namespace {

template <class T> T field(const json &j, const char *key) {
  if (!j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

Perm perm_from_json(const json &j, std::size_t degree) {
  if (j.is_string())
    return Perm::from_cycles(j.get<std::string>(), degree);
  if (!j.is_array())
    throw ValidationError("a generator must be an image array or a cycle string");
  std::vector<Point> images;
  for (const auto &x : j) {
    if (!x.is_number_unsigned())
      throw ValidationError("permutation images must be nonnegative integers");
    images.push_back(x.get<Point>());
  }
  if (images.size() != degree)
    throw ValidationError("generator has " + std::to_string(images.size()) +
                          " images, expected " + std::to_string(degree));
  return Perm(std::move(images));
}

std::vector<std::vector<Point>> table_from_json(const json &j, std::size_t rows) {
  if (!j.is_array() || j.size() != rows)
    throw ValidationError("action table needs " + std::to_string(rows) + " rows");
  std::vector<std::vector<Point>> out;
  for (const auto &row : j) {
    if (!row.is_array())
      throw ValidationError("action table rows must be arrays");
    std::vector<Point> r;
    for (const auto &x : row) {
      if (!x.is_number_unsigned())
        throw ValidationError("action entries must be nonnegative integers");
      r.push_back(x.get<Point>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<Elem, Elem> parse_pair_key(const std::string &key, std::size_t order) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw ValidationError("cochain key '" + key + "' is not of the form \"g,h\"");
  try {
    std::size_t used = 0;
    unsigned long g = std::stoul(key.substr(0, comma), &used);
    unsigned long h = std::stoul(key.substr(comma + 1));
    if (g >= order || h >= order)
      throw ValidationError("cochain key '" + key + "' names an element out of range");
    return {static_cast<Elem>(g), static_cast<Elem>(h)};
  } catch (const std::logic_error &) {
    throw ValidationError("cochain key '" + key + "' is not of the form \"g,h\"");
  }
}

} // namespace

GroupPtr group_from_json(const json &j, std::size_t order_cap) {
  if (j.is_string())
    return std::make_shared<const PermGroup>(named_group(j.get<std::string>(), order_cap));
  if (!j.is_object())
    throw ValidationError("group must be an object or a name");
  if (j.contains("named")) {
    auto name = field<std::string>(j, "named");
    // {"named": "symmetric", "n": 3} is the same as "symmetric:3"
    if (j.contains("n"))
      name += ":" + std::to_string(field<std::size_t>(j, "n"));
    return std::make_shared<const PermGroup>(named_group(name, order_cap));
  }
  auto degree = field<std::size_t>(j, "degree");
  const json &gens = j.contains("generators") ? j.at("generators") : json::array();
  if (!gens.is_array())
    throw ValidationError("'generators' must be an array");
  std::vector<Perm> perms;
  for (const auto &x : gens)
    perms.push_back(perm_from_json(x, degree));
  auto g = PermGroup::from_generators(perms, degree, order_cap);
  if (j.contains("name"))
    g.set_name(field<std::string>(j, "name"));
  return std::make_shared<const PermGroup>(std::move(g));
}

json group_to_json(const PermGroup &g) {
  json gens = json::array();
  for (Elem e : g.generators())
    gens.push_back(g.element(e).images());
  json out{{"degree", g.degree()}, {"generators", gens}};
  if (!g.name().empty())
    out["name"] = g.name();
  return out;
}

Subgroup parse_subgroup(const GroupPtr &g, std::string_view text) {
  std::vector<Elem> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(';', start);
    if (stop == std::string_view::npos)
      stop = text.size();
    auto piece = text.substr(start, stop - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      Perm p = Perm::from_cycles(piece, g->degree());
      auto e = g->find(p);
      if (!e)
        throw ValidationError("'" + std::string(piece) + "' is not an element of the group");
      gens.push_back(*e);
    }
    start = stop + 1;
  }
  return Subgroup::generated_by(g, gens);
}

GSetPtr gset_from_json(const GroupPtr &g, const json &j) {
  if (!j.is_object())
    throw ValidationError("G-set must be an object");
  if (j.contains("action")) {
    auto table = table_from_json(j.at("action"), g->order());
    std::size_t size = table.empty() ? 0 : table[0].size();
    if (j.contains("size"))
      size = field<std::size_t>(j, "size");
    return make_gset(GSet(g, size, table));
  }
  if (j.contains("generator_images")) {
    auto images = table_from_json(j.at("generator_images"), g->generators().size());
    std::size_t size = images.empty() ? field<std::size_t>(j, "size") : images[0].size();
    std::vector<Perm> gen_perms;
    for (auto &im : images) {
      if (im.size() != size)
        throw ValidationError("generator images have inconsistent lengths");
      gen_perms.emplace_back(std::move(im));
    }
    // Extend along the breadth-first construction of the group.
    std::vector<std::optional<Perm>> rho(g->order());
    rho[0] = Perm::identity(size);
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Elem x = queue[head];
      for (std::size_t k = 0; k < gen_perms.size(); ++k) {
        Elem y = g->mul(g->generators()[k], x);
        if (!rho[y]) {
          rho[y] = gen_perms[k] * *rho[x];
          queue.push_back(y);
        }
      }
    }
    std::vector<std::vector<Point>> table;
    for (auto &p : rho)
      table.push_back(p->images());
    return make_gset(GSet(g, size, table));
  }
  if (j.contains("trivial"))
    return make_gset(GSet::trivial(g, field<std::size_t>(j, "trivial")));
  if (j.contains("regular"))
    return make_gset(GSet::regular(g));
  if (j.contains("natural"))
    return make_gset(GSet::natural(g));
  if (j.contains("cosets"))
    return make_gset(GSet::coset_space(parse_subgroup(g, field<std::string>(j, "cosets"))));
  if (j.contains("sum")) {
    const json &parts = j.at("sum");
    if (!parts.is_array())
      throw ValidationError("'sum' must be an array");
    GSet acc = GSet::empty(g);
    for (const auto &p : parts)
      acc = gset_sum(acc, *gset_from_json(g, p));
    return make_gset(std::move(acc));
  }
  throw ValidationError("unrecognized G-set description");
}

json gset_to_json(const GSet &s) { return json{{"size", s.size()}, {"action", s.table()}}; }

Cochain2 cochain2_from_json(const GSetPtr &s, const json &j) {
  Cochain2 c(s);
  if (j.is_null())
    return c;
  if (!j.is_object())
    throw ValidationError("cocycle must be an object");
  if (!j.contains("values"))
    return c;
  const json &vals = j.at("values");
  if (!vals.is_object())
    throw ValidationError("'values' must map \"g,h\" to fraction arrays");
  const std::size_t order = s->group()->order();
  for (const auto &[key, arr] : vals.items()) {
    auto [g, h] = parse_pair_key(key, order);
    if (!arr.is_array() || arr.size() != s->size())
      throw ValidationError("cocycle entry '" + key + "' needs " + std::to_string(s->size()) +
                            " components");
    for (Point i = 0; i < s->size(); ++i) {
      const json &v = arr[i];
      if (v.is_string())
        c.at(g, h, i) = QZ::parse(v.get<std::string>());
      else if (v.is_number_integer())
        c.at(g, h, i) = QZ(v.get<std::int64_t>(), 1);
      else
        throw ValidationError("cocycle values must be \"p/q\" strings");
    }
  }
  return c;
}

json cochain2_to_json(const Cochain2 &c) {
  json vals = json::object();
  const std::size_t n = c.group_order(), m = c.gset()->size();
  // nlohmann::json keeps object keys sorted; zero entries are omitted
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      auto comp = c.at(g, h);
      if (std::all_of(comp.begin(), comp.end(), [](const QZ &q) { return q.is_zero(); }))
        continue;
      json arr = json::array();
      for (Point i = 0; i < m; ++i)
        arr.push_back(comp[i].to_string());
      vals[std::to_string(g) + "," + std::to_string(h)] = std::move(arr);
    }
  return json{{"values", std::move(vals)}};
}

json cochain1_to_json(const Cochain1 &b) {
  json vals = json::object();
  const std::size_t n = b.gset()->group()->order();
  for (Elem g = 0; g < n; ++g) {
    auto comp = b.at(g);
    if (std::all_of(comp.begin(), comp.end(), [](const QZ &q) { return q.is_zero(); }))
      continue;
    json arr = json::array();
    for (const auto &q : comp)
      arr.push_back(q.to_string());
    vals[std::to_string(g)] = std::move(arr);
  }
  return json{{"values", std::move(vals)}};
}

TwoRep rep_from_json(const json &j, const GroupPtr &default_group) {
  if (!j.is_object())
    throw ValidationError("representation must be an object");
  GroupPtr g = default_group;
  if (j.contains("group")) {
    GroupPtr given = group_from_json(j.at("group"));
    if (default_group && !given->same_as(*default_group))
      throw ValidationError("representation's group differs from the expected group");
    g = given;
  }
  if (!g)
    throw ValidationError("representation does not name its group");
  if (!j.contains("gset"))
    throw ValidationError("missing field 'gset'");
  auto s = gset_from_json(g, j.at("gset"));
  Cochain2 c = j.contains("cocycle") ? cochain2_from_json(s, j.at("cocycle")) : Cochain2(s);
  return TwoRep(s, std::move(c));
}

json rep_to_json(const TwoRep &r) {
  return json{{"group", group_to_json(*r.group())},
              {"gset", gset_to_json(*r.gset())},
              {"cocycle", cochain2_to_json(r.cocycle())}};
}

json cyclo_to_json(const Cyclo &c) {
  if (auto v = c.as_int())
    return json{{"int", *v}};
  return json{{"order", c.order()}, {"coeffs", c.coeffs()}};
}

json table_to_json(const PermGroup &g, const CharacterTable &t) {
  json classes = json::array();
  for (const auto &e : t.entries)
    classes.push_back(json{{"g", e.g},
                           {"h", e.h},
                           {"g_cycles", g.element(e.g).cycles()},
                           {"h_cycles", g.element(e.h).cycles()},
                           {"value", cyclo_to_json(e.value)}});
  return json{{"classes", std::move(classes)}};
}

std::string table_to_text(const PermGroup &g, const CharacterTable &t) {
  std::vector<std::array<std::string, 3>> rows{{"g", "h", "chi(g,h)"}};
  for (const auto &e : t.entries)
    rows.push_back({g.element(e.g).cycles(), g.element(e.h).cycles(), e.value.to_string()});
  std::size_t w0 = 0, w1 = 0;
  for (const auto &r : rows) {
    w0 = std::max(w0, r[0].size());
    w1 = std::max(w1, r[1].size());
  }
  std::ostringstream os;
  for (const auto &r : rows)
    os << r[0] << std::string(w0 - r[0].size() + 2, ' ') << r[1]
       << std::string(w1 - r[1].size() + 2, ' ') << r[2] << "\n";
  return os.str();
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

} // namespace twochar::io
