#include "gf/fggroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gf/util.hpp"

namespace gf {

TableFg::TableFg(GroupTable table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {}

int TableFg::index_of(const std::string& key) const {
  for (int i = 0; i < table_.order(); ++i)
    if (table_.names[i] == key) return i;
  fail("ParseError", "unknown element key '" + key + "' in " + name_);
}

std::string TableFg::identity() const { return table_.names[0]; }

std::vector<std::pair<std::string, std::string>> TableFg::generators() const {
  std::vector<int> gens = table_.gens.empty() ? table_.greedy_gens() : table_.gens;
  std::vector<std::pair<std::string, std::string>> out;
  for (int g : gens) out.emplace_back(table_.names[g], table_.names[g]);
  return out;
}

std::string TableFg::mul(const std::string& a, const std::string& b) const {
  return table_.names[table_.mul[index_of(a)][index_of(b)]];
}

std::string TableFg::inv(const std::string& a) const {
  return table_.names[table_.inv[index_of(a)]];
}

PermGroupFg::PermGroupFg(FinPermGroup group, std::string name)
    : group_(std::move(group)), name_(std::move(name)) {}

std::string PermGroupFg::identity() const { return Perm(group_.degree).print_images(); }

std::vector<std::pair<std::string, std::string>> PermGroupFg::generators() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& g : group_.gens) out.emplace_back(g.print_cycles(), g.print_images());
  return out;
}

std::string PermGroupFg::mul(const std::string& a, const std::string& b) const {
  return (Perm::parse(group_.degree, a) * Perm::parse(group_.degree, b)).print_images();
}

std::string PermGroupFg::inv(const std::string& a) const {
  return Perm::parse(group_.degree, a).inverse().print_images();
}

std::string ZGroup::mul(const std::string& a, const std::string& b) const {
  return std::to_string(std::stoll(a) + std::stoll(b));
}

std::string ZGroup::inv(const std::string& a) const { return std::to_string(-std::stoll(a)); }

namespace {

std::string netstr(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

std::string read_netstr(const std::string& in, size_t& pos) {
  size_t colon = in.find(':', pos);
  if (colon == std::string::npos) fail("ParseError", "bad wreath element key");
  size_t len = std::stoul(in.substr(pos, colon - pos));
  std::string out = in.substr(colon + 1, len);
  pos = colon + 1 + len;
  return out;
}

}  // namespace

LazyWreath::LazyWreath(FgGroupPtr base, FgGroupPtr top)
    : base_(std::move(base)), top_(std::move(top)) {}

std::string LazyWreath::name() const { return base_->name() + " wr " + top_->name(); }

std::string LazyWreath::encode(Elem e) const {
  std::sort(e.support.begin(), e.support.end());
  std::string out = "W" + netstr(e.shift) + netstr(std::to_string(e.support.size()));
  for (const auto& [pos, val] : e.support) out += netstr(pos) + netstr(val);
  return out;
}

LazyWreath::Elem LazyWreath::decode(const std::string& key) const {
  if (key.empty() || key[0] != 'W') fail("ParseError", "bad wreath element key");
  size_t pos = 1;
  Elem e;
  e.shift = read_netstr(key, pos);
  size_t count = std::stoul(read_netstr(key, pos));
  for (size_t i = 0; i < count; ++i) {
    std::string p = read_netstr(key, pos);
    std::string v = read_netstr(key, pos);
    e.support.emplace_back(std::move(p), std::move(v));
  }
  return e;
}

std::string LazyWreath::identity() const {
  Elem e;
  e.shift = top_->identity();
  return encode(e);
}

std::string LazyWreath::base_at_origin(const std::string& base_key) const {
  Elem e;
  e.shift = top_->identity();
  if (base_key != base_->identity()) e.support.emplace_back(top_->identity(), base_key);
  return encode(e);
}

std::vector<std::pair<std::string, std::string>> LazyWreath::generators() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [label, key] : base_->generators())
    out.emplace_back("base:" + label, base_at_origin(key));
  for (const auto& [label, key] : top_->generators()) {
    Elem e;
    e.shift = key;
    out.emplace_back("top:" + label, encode(e));
  }
  return out;
}

std::string LazyWreath::mul(const std::string& a, const std::string& b) const {
  Elem ea = decode(a), eb = decode(b);
  std::map<std::string, std::string> merged(ea.support.begin(), ea.support.end());
  for (const auto& [pos, val] : eb.support) {
    std::string shifted = top_->mul(ea.shift, pos);
    auto it = merged.find(shifted);
    if (it == merged.end()) {
      merged.emplace(shifted, val);
    } else {
      std::string prod = base_->mul(it->second, val);
      if (prod == base_->identity())
        merged.erase(it);
      else
        it->second = prod;
    }
  }
  Elem out;
  out.shift = top_->mul(ea.shift, eb.shift);
  out.support.assign(merged.begin(), merged.end());
  return encode(out);
}

std::string LazyWreath::inv(const std::string& a) const {
  Elem e = decode(a);
  Elem out;
  out.shift = top_->inv(e.shift);
  for (const auto& [pos, val] : e.support)
    out.support.emplace_back(top_->mul(out.shift, pos), base_->inv(val));
  return encode(out);
}

std::vector<std::string> ball_enumerate(const FgGroup& g, int radius) {
  if (radius < 0) fail("CapExceeded", "negative radius");
  if (radius > 16) fail("CapExceeded", "ball radius capped at 16");
  std::vector<std::string> step;
  {
    std::set<std::string> seen;
    for (const auto& [label, key] : g.generators()) {
      (void)label;
      if (seen.insert(key).second) step.push_back(key);
      std::string ik = g.inv(key);
      if (seen.insert(ik).second) step.push_back(ik);
    }
  }
  std::vector<std::string> ball{g.identity()};
  std::unordered_set<std::string> seen{g.identity()};
  size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    size_t level_end = ball.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (const auto& s : step) {
        std::string nxt = g.mul(ball[i], s);
        if (seen.insert(nxt).second) ball.push_back(nxt);
      }
    level_begin = level_end;
  }
  return ball;
}

int conjugacy_growth_probe(const FgGroup& g, const std::string& elem, int radius) {
  if (elem == g.identity()) fail("InvalidArgument", "probe element must not be identity");
  std::unordered_set<std::string> conj;
  for (const auto& h : ball_enumerate(g, radius))
    conj.insert(g.mul(h, g.mul(elem, g.inv(h))));
  return static_cast<int>(conj.size());
}

}  // namespace gf
