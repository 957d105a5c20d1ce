#include "gf/neumann.hpp"

#include <algorithm>
#include <sstream>

#include "gf/groups.hpp"
#include "gf/util.hpp"

namespace gf {

OddPrefix OddPrefix::from_entries(std::vector<uint64_t> entries) {
  if (entries.empty()) fail("InvalidPrefix", "prefix must have at least one entry");
  uint64_t prev = 0;
  for (uint64_t u : entries) {
    if (u < 5 || u % 2 == 0)
      fail("InvalidPrefix", "entries must be odd and >= 5, got " + std::to_string(u));
    if (u <= prev) fail("InvalidPrefix", "entries must be strictly increasing");
    prev = u;
  }
  OddPrefix p;
  p.entries = std::move(entries);
  return p;
}

OddPrefix OddPrefix::parse(const std::string& csv) {
  std::vector<uint64_t> entries;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t\r\n") + 1);
    if (tok.empty()) fail("ParseError", "empty entry in prefix '" + csv + "'");
    entries.push_back(std::stoull(tok));
  }
  return from_entries(std::move(entries));
}

std::string OddPrefix::print() const {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

Point Point::parse(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) fail("ParseError", "point must be 'j:k', got '" + text + "'");
  Point p;
  p.block = std::stoull(text.substr(0, colon));
  p.slot = std::stoull(text.substr(colon + 1));
  if (p.block < 1 || p.slot < 1) fail("ParseError", "point indices are 1-based");
  return p;
}

std::string Point::print() const {
  return std::to_string(block) + ":" + std::to_string(slot);
}

Word Word::parse(const std::string& text) {
  Word w;
  for (char c : text) {
    switch (c) {
      case 'a': w.letters.push_back(Gen::Alpha); break;
      case 'A': w.letters.push_back(Gen::AlphaInv); break;
      case 'b': w.letters.push_back(Gen::Beta); break;
      case 'B': w.letters.push_back(Gen::BetaInv); break;
      case ' ': break;
      default: fail("ParseError", std::string("word letters are a A b B, got '") + c + "'");
    }
  }
  return w;
}

std::string Word::print() const {
  std::string out;
  for (Gen g : letters) {
    switch (g) {
      case Gen::Alpha: out += 'a'; break;
      case Gen::AlphaInv: out += 'A'; break;
      case Gen::Beta: out += 'b'; break;
      case Gen::BetaInv: out += 'B'; break;
    }
  }
  return out;
}

namespace {

uint64_t block_length_checked(const OddPrefix& u, const Point& p) {
  if (p.block < 1 || p.block > u.length())
    fail("BlockOutOfRange",
         "block " + std::to_string(p.block) + " beyond known prefix of length " +
             std::to_string(u.length()));
  uint64_t len = u.entries[p.block - 1];
  if (p.slot < 1 || p.slot > len)
    fail("InvalidPoint", "slot " + std::to_string(p.slot) + " outside 1.." + std::to_string(len));
  return len;
}

}  // namespace

Point alpha_apply(const OddPrefix& u, Point p) {
  uint64_t len = block_length_checked(u, p);
  p.slot = p.slot < len ? p.slot + 1 : 1;
  return p;
}

Point beta_apply(const OddPrefix& u, Point p) {
  block_length_checked(u, p);
  if (p.slot <= 3) p.slot = p.slot == 3 ? 1 : p.slot + 1;
  return p;
}

Point word_apply(const OddPrefix& u, const Word& w, Point p) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case Gen::Alpha: p = alpha_apply(u, p); break;
      case Gen::Beta: p = beta_apply(u, p); break;
      case Gen::AlphaInv: {
        uint64_t len = block_length_checked(u, p);
        p.slot = p.slot > 1 ? p.slot - 1 : len;
        break;
      }
      case Gen::BetaInv: {
        block_length_checked(u, p);
        if (p.slot <= 3) p.slot = p.slot == 1 ? 3 : p.slot - 1;
        break;
      }
    }
  }
  return p;
}

Word word_reduce(const Word& w) {
  std::vector<Gen> cur;
  for (Gen g : w.letters) {
    if (g == Gen::BetaInv) {
      cur.push_back(Gen::Beta);
      cur.push_back(Gen::Beta);
    } else {
      cur.push_back(g);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Gen> next;
    size_t i = 0;
    while (i < cur.size()) {
      if (cur[i] == Gen::Beta) {
        size_t run = 0;
        while (i + run < cur.size() && cur[i + run] == Gen::Beta) ++run;
        size_t keep = run % 3;
        for (size_t j = 0; j < keep; ++j) next.push_back(Gen::Beta);
        if (keep != run) changed = true;
        i += run;
      } else if (i + 1 < cur.size() &&
                 ((cur[i] == Gen::Alpha && cur[i + 1] == Gen::AlphaInv) ||
                  (cur[i] == Gen::AlphaInv && cur[i + 1] == Gen::Alpha))) {
        changed = true;
        i += 2;
      } else {
        next.push_back(cur[i]);
        ++i;
      }
    }
    cur = std::move(next);
  }
  Word out;
  out.letters = std::move(cur);
  return out;
}

BlockGenerators block_restriction(const OddPrefix& u, uint64_t block) {
  if (block < 1 || block > u.length())
    fail("BlockOutOfRange", "block " + std::to_string(block) + " beyond prefix");
  uint64_t n = u.entries[block - 1];
  if (n > 1000000) fail("CapExceeded", "block length too large to materialize");
  std::vector<int> full(n), three{1, 2, 3};
  for (uint64_t i = 0; i < n; ++i) full[i] = static_cast<int>(i + 1);
  BlockGenerators bg;
  bg.degree = n;
  bg.alpha_part = Perm::from_cycles(static_cast<int>(n), {full});
  bg.beta_part = Perm::from_cycles(static_cast<int>(n), {three});
  return bg;
}

uint64_t alpha_order_truncated(const OddPrefix& u, size_t depth) {
  if (depth < 1 || depth > u.length())
    fail("BlockOutOfRange", "depth " + std::to_string(depth) + " beyond prefix");
  uint64_t ord = 1;
  for (size_t j = 0; j < depth; ++j) ord = lcm_checked(ord, u.entries[j]);
  return ord;
}

std::vector<BlockInvariant> alternating_invariant_detail(const OddPrefix& u, size_t depth,
                                                         long closure_cap) {
  if (depth < 1 || depth > u.length())
    fail("BlockOutOfRange", "depth " + std::to_string(depth) + " beyond prefix");
  std::vector<BlockInvariant> out;
  for (size_t j = 1; j <= depth; ++j) {
    uint64_t n = u.entries[j - 1];
    // n!/2 with saturation, to decide enumerability under the cap
    uint64_t half_fact = 1;
    bool fits = true;
    for (uint64_t k = 3; k <= n && fits; ++k) {
      if (half_fact > static_cast<uint64_t>(closure_cap) / k) fits = false;
      else half_fact *= k;
    }
    BlockInvariant bi;
    if (fits && half_fact <= static_cast<uint64_t>(closure_cap)) {
      BlockGenerators bg = block_restriction(u, j);
      FinPermGroup g = FinPermGroup::from_gens(static_cast<int>(bg.degree),
                                               {bg.alpha_part, bg.beta_part});
      auto deg = is_alternating(g, closure_cap);
      if (!deg || static_cast<uint64_t>(*deg) != n)
        fail("RecognitionFailure",
             "block " + std::to_string(j) + " closure is not the alternating group of degree " +
                 std::to_string(n));
      bi.degree = static_cast<uint64_t>(*deg);
      bi.enumerated = true;
    } else {
      bi.degree = n;  // declared from the defining cycles, not enumerated
      bi.enumerated = false;
    }
    out.push_back(bi);
  }
  return out;
}

std::vector<uint64_t> alternating_invariant(const OddPrefix& u, size_t depth, long closure_cap) {
  std::vector<uint64_t> out;
  for (const auto& bi : alternating_invariant_detail(u, depth, closure_cap))
    out.push_back(bi.degree);
  return out;
}

DistinguishOutcome distinguish_prefixes(const OddPrefix& u, const OddPrefix& v) {
  DistinguishOutcome out;
  size_t common = std::min(u.length(), v.length());
  for (size_t i = 0; i < common; ++i) {
    if (u.entries[i] != v.entries[i]) {
      out.distinct = true;
      out.index = i + 1;
      out.left_entry = u.entries[i];
      out.right_entry = v.entries[i];
      return out;
    }
  }
  out.common_depth = common;
  return out;
}

Certificate distinguish(const OddPrefix& u, const OddPrefix& v) {
  DistinguishOutcome o = distinguish_prefixes(u, v);
  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "non-isomorphism";
  d["subject"] = "neumann-prefix-pair";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  d["inputs"]["left_prefix"] = u.print();
  d["inputs"]["left_digest"] = content_digest(u.print());
  d["inputs"]["right_prefix"] = v.print();
  d["inputs"]["right_digest"] = content_digest(v.print());
  if (o.distinct) {
    uint64_t deg = std::min(o.left_entry, o.right_entry);
    bool left_has = o.left_entry == deg;
    d["verdict"] = "distinct";
    ojson w;
    w["index"] = o.index;
    w["left_entry"] = o.left_entry;
    w["right_entry"] = o.right_entry;
    w["distinguishing_degree"] = deg;
    w["left_normal_subgroup_order"] = half_factorial_string(o.left_entry);
    w["right_normal_subgroup_order"] = half_factorial_string(o.right_entry);
    w["statement"] =
        std::string("exactly the ") + (left_has ? "left" : "right") +
        " group has a finite normal subgroup of order " + std::to_string(deg) +
        "!/2 = " + half_factorial_string(deg) + ", from block " + std::to_string(o.index) +
        "; the other sequence is strictly increasing past a larger entry at that index, so degree " +
        std::to_string(deg) + " occurs nowhere in it, prefix or tail";
    d["witnesses"] = ojson::array({w});
  } else {
    d["verdict"] = "inconclusive";
    d["depth"] = o.common_depth;
    d["witnesses"] = ojson::array();
  }
  d["recheck"] =
      "recompute the first index where the prefixes differ; when they differ, the witness "
      "degree must be the smaller entry there and must not occur in the other prefix; when "
      "they agree on the common length the verdict must be inconclusive at that depth";
  return cert;
}

}  // namespace gf
