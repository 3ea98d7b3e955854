#include "twochar/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "twochar/error.hpp"

namespace twochar {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw ValidationError("permutation images are not a bijection of {0.." +
                            std::to_string(images_.size()) + "-1}");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Perm(std::move(im));
}

namespace {

std::vector<Point> parse_cycle_body(std::string_view body) {
  std::vector<Point> pts;
  bool has_comma = body.find(',') != std::string_view::npos;
  bool has_space = false;
  {
    // whitespace strictly between two digits separates points
    bool seen_digit = false, gap = false;
    for (char ch : body) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (seen_digit && gap)
          has_space = true;
        seen_digit = true;
        gap = false;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        gap = true;
      } else if (ch != ',') {
        throw ValidationError(std::string("unexpected character '") + ch +
                              "' in cycle notation");
      }
    }
  }
  if (has_comma || has_space) {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        pts.push_back(static_cast<Point>(std::stoul(token)));
        token.clear();
      }
    };
    for (char ch : body) {
      if (std::isdigit(static_cast<unsigned char>(ch)))
        token.push_back(ch);
      else
        flush();
    }
    flush();
  } else {
    for (char ch : body)
      if (std::isdigit(static_cast<unsigned char>(ch)))
        pts.push_back(static_cast<Point>(ch - '0'));
  }
  return pts;
}

} // namespace

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  // Cycles are composed left to right as written, i.e. the rightmost acts
  // first; for disjoint cycles the order is immaterial.
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(')
      throw ValidationError("cycle notation must consist of parenthesized cycles");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw ValidationError("unbalanced parenthesis in cycle notation");
    cycles.push_back(parse_cycle_body(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  Perm result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto &cyc = *it;
    std::vector<Point> step(degree);
    std::iota(step.begin(), step.end(), Point{0});
    std::set<Point> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size())
      throw ValidationError("repeated point inside a cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree)
        throw ValidationError("point " + std::to_string(cyc[i]) +
                              " out of range for degree " + std::to_string(degree));
      step[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    result = Perm(std::move(step)) * result;
  }
  return result;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw ValidationError("composing permutations of different degree");
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    im[x] = images_[rhs.images_[x]];
  Perm out;
  out.images_ = std::move(im);
  return out;
}

Perm Perm::inverse() const {
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    im[images_[x]] = static_cast<Point>(x);
  Perm out;
  out.images_ = std::move(im);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    out += '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first)
        out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ----------------------------------------------------------- PermGroup

PermGroup PermGroup::from_generators(const std::vector<Perm> &gens,
                                     std::size_t degree,
                                     std::size_t order_cap) {
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw ValidationError("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree));

  std::vector<Perm> elements{Perm::identity(degree)};
  std::map<std::vector<Point>, Elem> index{{elements[0].images(), 0}};
  std::vector<Elem> gen_index;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : gens) {
      Perm next = g * elements[head];
      if (index.contains(next.images()))
        continue;
      if (elements.size() >= order_cap)
        throw ResourceError("group order exceeds cap of " +
                            std::to_string(order_cap));
      index.emplace(next.images(), static_cast<Elem>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  for (const auto &g : gens)
    gen_index.push_back(index.at(g.images()));

  PermGroup out;
  out.degree_ = degree;
  out.elements_ = std::move(elements);
  out.generators_ = std::move(gen_index);
  out.build_tables();
  return out;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements,
                                   std::vector<Elem> generators) {
  if (elements.empty() || !elements[0].is_identity())
    throw ValidationError("element list must start with the identity");
  PermGroup out;
  out.degree_ = elements[0].degree();
  out.elements_ = std::move(elements);
  out.generators_ = std::move(generators);
  out.build_tables();
  return out;
}

void PermGroup::build_tables() {
  const std::size_t n = elements_.size();
  lookup_.clear();
  lookup_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].degree() != degree_)
      throw ValidationError("element degrees disagree");
    lookup_.emplace_back(elements_[i].images(), static_cast<Elem>(i));
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < n; ++i)
    if (lookup_[i].first == lookup_[i - 1].first)
      throw ValidationError("duplicate group element");

  mul_.assign(n * n, 0);
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = find(elements_[a] * elements_[b]);
      if (!prod)
        throw ValidationError("element list is not closed under composition");
      mul_[a * n + b] = *prod;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto ia = find(elements_[a].inverse());
    if (!ia)
      throw ValidationError("element list is not closed under inverses");
    inv_[a] = *ia;
  }
}

std::optional<Elem> PermGroup::find(const Perm &p) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), p.images(),
      [](const auto &entry, const std::vector<Point> &key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != p.images())
    return std::nullopt;
  return it->second;
}

std::size_t PermGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem x = g; x != identity(); x = mul(x, g))
    ++k;
  return k;
}

std::vector<std::vector<Elem>> PermGroup::conjugacy_classes() const {
  std::vector<std::vector<Elem>> classes;
  std::vector<char> seen(order(), 0);
  for (Elem g = 0; g < order(); ++g) {
    if (seen[g])
      continue;
    std::set<Elem> cls;
    for (Elem s = 0; s < order(); ++s)
      cls.insert(conjugate(s, g));
    for (Elem x : cls)
      seen[x] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

bool PermGroup::same_as(const PermGroup &other) const {
  return this == &other ||
         (degree_ == other.degree_ && elements_ == other.elements_);
}

// --------------------------------------------------------- named groups

namespace {

PermGroup named_factor(std::string_view spec, std::size_t cap) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  std::optional<long> param;
  if (colon != std::string_view::npos) {
    std::string digits(spec.substr(colon + 1));
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ValidationError("bad parameter in group spec '" + std::string(spec) + "'");
    param = std::stol(digits);
  }
  auto need = [&](long lo, long hi) -> std::size_t {
    if (!param)
      throw ValidationError("group '" + name + "' needs a parameter, e.g. " + name + ":3");
    if (*param < lo || *param > hi)
      throw ValidationError("parameter " + std::to_string(*param) + " out of range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "] for group '" + name + "'");
    return static_cast<std::size_t>(*param);
  };
  auto cycle = [](std::size_t n) {
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i)
      im[i] = static_cast<Point>((i + 1) % n);
    return Perm(std::move(im));
  };

  PermGroup out;
  if (name == "cyclic") {
    std::size_t n = need(1, 4096);
    std::vector<Perm> gens;
    if (n > 1)
      gens.push_back(cycle(n));
    out = PermGroup::from_generators(gens, n, cap);
    out.set_name("cyclic:" + std::to_string(n));
  } else if (name == "symmetric") {
    std::size_t n = need(1, 12);
    std::vector<Perm> gens;
    if (n > 1) {
      gens.push_back(Perm::from_cycles("(0,1)", n));
      if (n > 2)
        gens.push_back(cycle(n));
    }
    out = PermGroup::from_generators(gens, n, cap);
    out.set_name("symmetric:" + std::to_string(n));
  } else if (name == "dihedral") {
    std::size_t n = need(3, 2048);
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i)
      refl[i] = static_cast<Point>((n - i) % n);
    out = PermGroup::from_generators({cycle(n), Perm(std::move(refl))}, n, cap);
    out.set_name("dihedral:" + std::to_string(n));
  } else if (name == "klein4") {
    if (param)
      throw ValidationError("klein4 takes no parameter");
    out = PermGroup::from_generators(
        {Perm::from_cycles("(0,1)(2,3)", 4), Perm::from_cycles("(0,2)(1,3)", 4)}, 4, cap);
    out.set_name("klein4");
  } else {
    throw ValidationError("unknown group name '" + name + "'");
  }
  return out;
}

Perm shift_into(const Perm &p, std::size_t offset, std::size_t degree) {
  auto im = Perm::identity(degree).images();
  for (std::size_t x = 0; x < p.degree(); ++x)
    im[x + offset] = static_cast<Point>(p(static_cast<Point>(x)) + offset);
  return Perm(std::move(im));
}

} // namespace

PermGroup named_group(std::string_view spec, std::size_t order_cap) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      continue;
    if (ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  parts.push_back(cur);
  for (const auto &p : parts)
    if (p.empty())
      throw ValidationError("empty factor in group spec '" + std::string(spec) + "'");

  if (parts.size() == 1)
    return named_factor(parts[0], order_cap);

  std::vector<PermGroup> factors;
  std::size_t degree = 0;
  std::string name;
  for (const auto &p : parts) {
    factors.push_back(named_factor(p, order_cap));
    degree += factors.back().degree();
    name += (name.empty() ? "" : "*") + factors.back().name();
  }
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto &f : factors) {
    for (Elem g : f.generators())
      gens.push_back(shift_into(f.element(g), offset, degree));
    offset += f.degree();
  }
  auto out = PermGroup::from_generators(gens, degree, order_cap);
  out.set_name(name);
  return out;
}

// ------------------------------------------------------------ Subgroup

Subgroup::Subgroup(GroupPtr ambient, std::vector<Elem> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  const auto &g = *ambient_;
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(g.order(), 0);
  for (Elem x : members_) {
    if (x >= g.order())
      throw ValidationError("subgroup member index out of range");
    mask_[x] = 1;
  }
  if (members_.empty() || !mask_[PermGroup::identity()])
    throw ValidationError("subgroup does not contain the identity");
  for (Elem a : members_) {
    if (!mask_[g.inv(a)])
      throw ValidationError("subgroup not closed under inverses");
    for (Elem b : members_)
      if (!mask_[g.mul(a, b)])
        throw ValidationError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::whole(GroupPtr ambient) {
  std::vector<Elem> all(ambient->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(ambient), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr ambient) {
  return Subgroup(std::move(ambient), {PermGroup::identity()});
}

namespace {

std::vector<Elem> closure(const PermGroup &g, const std::vector<Elem> &gens) {
  std::vector<char> mask(g.order(), 0);
  std::vector<Elem> out{PermGroup::identity()};
  mask[PermGroup::identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Elem s : gens) {
      Elem next = g.mul(out[head], s);
      if (!mask[next]) {
        mask[next] = 1;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Subgroup Subgroup::generated_by(GroupPtr ambient, const std::vector<Elem> &gens) {
  for (Elem s : gens)
    if (s >= ambient->order())
      throw ValidationError("generator index out of range");
  auto members = closure(*ambient, gens);
  return Subgroup(std::move(ambient), std::move(members));
}

std::optional<Elem> Subgroup::local_index(Elem g) const {
  if (!contains(g))
    return std::nullopt;
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  return static_cast<Elem>(it - members_.begin());
}

PermGroup Subgroup::as_group() const {
  std::vector<Perm> perms;
  perms.reserve(members_.size());
  for (Elem x : members_)
    perms.push_back(ambient_->element(x));
  return PermGroup::from_elements(std::move(perms));
}

Subgroup Subgroup::conjugate_by(Elem s) const {
  std::vector<Elem> conj;
  conj.reserve(members_.size());
  for (Elem x : members_)
    conj.push_back(ambient_->conjugate(s, x));
  return Subgroup(ambient_, std::move(conj));
}

bool are_conjugate(const Subgroup &a, const Subgroup &b) {
  if (a.order() != b.order())
    return false;
  const auto &g = *a.ambient();
  for (Elem s = 0; s < g.order(); ++s) {
    bool all = true;
    for (Elem x : a.members())
      if (!b.contains(g.conjugate(s, x))) {
        all = false;
        break;
      }
    if (all)
      return true;
  }
  return false;
}

// -------------------------------------------------------------- cosets

CosetReps left_coset_reps(const PermGroup &g, const Subgroup &h) {
  if (!h.ambient()->same_as(g))
    throw ValidationError("subgroup belongs to a different group");
  CosetReps out;
  const std::size_t unset = static_cast<std::size_t>(-1);
  out.coset_of.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != unset)
      continue;
    std::size_t pos = out.reps.size();
    out.reps.push_back(x);
    for (Elem y : h.members())
      out.coset_of[g.mul(x, y)] = pos;
  }
  return out;
}

CosetReps coset_reps_from_list(const PermGroup &g, const Subgroup &h,
                               const std::vector<Elem> &reps) {
  if (!h.ambient()->same_as(g))
    throw ValidationError("subgroup belongs to a different group");
  if (reps.empty() || reps.size() * h.order() != g.order())
    throw ValidationError("coset representative count does not match the index");
  CosetReps out;
  out.reps = reps;
  const std::size_t unset = static_cast<std::size_t>(-1);
  out.coset_of.assign(g.order(), unset);
  for (std::size_t pos = 0; pos < reps.size(); ++pos) {
    if (reps[pos] >= g.order())
      throw ValidationError("coset representative out of range");
    for (Elem y : h.members()) {
      Elem x = g.mul(reps[pos], y);
      if (out.coset_of[x] != unset)
        throw ValidationError("two representatives lie in the same left coset");
      out.coset_of[x] = pos;
    }
  }
  return out;
}

// ------------------------------------------------------ commuting pairs

std::vector<ElemPair> commuting_pairs(const PermGroup &g) {
  std::vector<ElemPair> out;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (g.commute(a, b))
        out.emplace_back(a, b);
  return out;
}

std::vector<PairClass> simultaneous_pair_classes(const PermGroup &g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n * n, 0);
  std::vector<PairClass> out;
  for (const auto &[a, b] : commuting_pairs(g)) {
    if (seen[std::size_t(a) * n + b])
      continue;
    std::set<ElemPair> orbit;
    for (Elem s = 0; s < n; ++s)
      orbit.emplace(g.conjugate(s, a), g.conjugate(s, b));
    for (const auto &[x, y] : orbit)
      seen[std::size_t(x) * n + y] = 1;
    out.push_back({{a, b}, {orbit.begin(), orbit.end()}});
  }
  return out;
}

// ----------------------------------------------------------- subgroups

std::vector<Subgroup> all_subgroups(const GroupPtr &g, std::size_t cap) {
  // Every subgroup is a join of cyclic subgroups; grow joins to a fixpoint.
  std::map<std::vector<Elem>, std::vector<Elem>> found; // members -> gens
  std::vector<std::vector<Elem>> queue;
  auto add = [&](std::vector<Elem> gens) {
    auto members = closure(*g, gens);
    if (found.contains(members))
      return;
    if (found.size() >= cap)
      throw ResourceError("more than " + std::to_string(cap) + " subgroups");
    found.emplace(members, gens);
    queue.push_back(std::move(members));
  };
  add({});
  std::vector<Elem> cyclic_gens;
  {
    std::set<std::vector<Elem>> cyclic;
    for (Elem x = 0; x < g->order(); ++x)
      if (cyclic.insert(closure(*g, {x})).second)
        cyclic_gens.push_back(x);
  }
  for (Elem x : cyclic_gens)
    add({x});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto members = queue[head];
    const auto gens = found.at(members);
    std::vector<char> mask(g->order(), 0);
    for (Elem m : members)
      mask[m] = 1;
    for (Elem x : cyclic_gens) {
      if (mask[x])
        continue;
      auto more = gens;
      more.push_back(x);
      add(std::move(more));
    }
  }
  std::vector<std::vector<Elem>> lists;
  for (const auto &[members, gens] : found)
    lists.push_back(members);
  std::sort(lists.begin(), lists.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  for (auto &m : lists)
    out.emplace_back(g, std::move(m));
  return out;
}

std::vector<Subgroup> subgroup_class_reps(const GroupPtr &g, std::size_t cap) {
  std::vector<Subgroup> reps;
  for (auto &h : all_subgroups(g, cap)) {
    bool known = std::any_of(reps.begin(), reps.end(),
                             [&](const Subgroup &r) { return are_conjugate(r, h); });
    if (!known)
      reps.push_back(std::move(h));
  }
  return reps;
}

} // namespace twochar
