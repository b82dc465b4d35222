#pragma once

// Golden identity corpus: hand-transcribed closed forms regenerated by the
// engine and compared after canonicalization.

#include "fibsum/closed_form.hpp"
#include "fibsum/generating.hpp"
#include "fibsum/json_io.hpp"
#include "fibsum/split.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fibsum {

/// closed:      finite sum closed form (numeric or symbolic w)
/// genfunc:     infinite sum, head only
/// split-even:  sum_{j=0}^K (-1)^j j^r G_{2j}^n
/// split-odd:   sum_{j=1}^K (-1)^{j-1} (2j-1)^r G_{2j-1}^n
/// split-odd-j: sum_{j=1}^K (-1)^{j-1} j^r G_{2j-1}^n
struct GoldenEntry {
  std::string id;
  std::string kind;
  std::string source;
  Json expected;
};

struct GoldenResult {
  std::string id;
  bool pass = false;
  std::vector<std::string> diffs;
};

inline std::vector<GoldenEntry> load_corpus(const Json& j) {
  std::vector<GoldenEntry> out;
  for (const auto& e : j.at("identities")) {
    out.push_back({e.at("id").get<std::string>(), e.at("kind").get<std::string>(), e.value("source", std::string()),
                   e.at("expected")});
  }
  return out;
}

inline std::vector<GoldenEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus '" + path + "'");
  return load_corpus(Json::parse(in));
}

namespace detail {

template <typename Coeff>
void diff_forms(const ClosedForm<Coeff>& want, const ClosedForm<Coeff>& got, std::vector<std::string>& diffs) {
  for (std::size_t j = 0; j < std::max(want.head.size(), got.head.size()); ++j) {
    const std::string a = j < want.head.size() ? want.head[j].str() : "0";
    const std::string b = j < got.head.size() ? got.head[j].str() : "0";
    if (a != b) diffs.push_back("head[" + std::to_string(j) + "]: expected " + a + ", got " + b);
  }
  auto poly_text = [](const auto& p) {
    std::string s = "[";
    for (const auto& c : p.coeff_strings()) s += (s.size() > 1 ? "," : "") + c;
    return s + "]";
  };
  for (std::size_t t = 0; t < std::max(want.tail.size(), got.tail.size()); ++t) {
    const std::string a = t < want.tail.size() ? poly_text(want.tail[t].poly_k) : "-";
    const std::string b = t < got.tail.size() ? poly_text(got.tail[t].poly_k) : "-";
    const long off = t < want.tail.size() ? want.tail[t].offset : got.tail[t].offset;
    if (a != b) diffs.push_back("tail[offset " + std::to_string(off) + "]: expected " + a + ", got " + b);
  }
}

template <typename Coeff>
void compare_closed(ClosedForm<Coeff> want, ClosedForm<Coeff> got, bool head_only, std::vector<std::string>& diffs) {
  got = canonicalize(with_basis(got, want.basis));
  want = canonicalize(want);
  if (head_only) {
    got.tail.clear();
    want.tail.clear();
  }
  diff_forms(want, got, diffs);
}

inline void compare_alternating(const AlternatingForm& want, const AlternatingForm& got, std::vector<std::string>& diffs) {
  for (std::size_t j = 0; j < std::max(want.head.size(), got.head.size()); ++j) {
    const std::string a = j < want.head.size() ? want.head[j].str() : "0";
    const std::string b = j < got.head.size() ? got.head[j].str() : "0";
    if (a != b) diffs.push_back("head[" + std::to_string(j) + "]: expected " + a + ", got " + b);
  }
  for (const auto& g : got.tail) {
    RPoly expected;
    for (const auto& w : want.tail) {
      if (w.offset == g.offset) expected += w.poly_K;
    }
    if (!(expected == g.poly_K)) {
      auto text = [](const RPoly& p) {
        std::string s = "[";
        for (const auto& c : p.coeff_strings()) s += (s.size() > 1 ? "," : "") + c;
        return s + "]";
      };
      diffs.push_back("tail[offset " + std::to_string(g.offset) + "]: expected " + text(expected) + ", got " +
                      text(g.poly_K));
    }
  }
  for (const auto& w : want.tail) {
    const bool known = std::any_of(got.tail.begin(), got.tail.end(), [&](const auto& g) { return g.offset == w.offset; });
    if (!known && !w.poly_K.is_zero()) diffs.push_back("tail[offset " + std::to_string(w.offset) + "]: not in basis");
  }
}

}  // namespace detail

/// Regenerates one entry with the engine and diffs it against the fixture.
inline GoldenResult check_entry(const GoldenEntry& e) {
  GoldenResult res{e.id, false, {}};
  try {
    if (e.kind == "closed" || e.kind == "genfunc") {
      const bool head_only = e.kind == "genfunc";
      if (is_symbolic_json(e.expected)) {
        const auto want = symbolic_form_from_json(e.expected);
        const auto got = head_only ? generating_function(want.n, want.r, Symbolic{}) : closed_form(want.n, want.r, Symbolic{});
        detail::compare_closed(want, got, head_only, res.diffs);
      } else {
        const auto want = numeric_form_from_json(e.expected);
        const auto got = head_only ? generating_function(want.n, want.r, *want.w) : closed_form(want.n, want.r, *want.w);
        detail::compare_closed(want, got, head_only, res.diffs);
      }
    } else if (e.kind == "split-even" || e.kind == "split-odd" || e.kind == "split-odd-j") {
      const auto want = alternating_form_from_json(e.expected);
      AlternatingForm got;
      if (e.kind == "split-odd-j") {
        got = odd_index_weighted_by_j(want.n, want.r);
      } else {
        const auto s = split_alternating(want.n, want.r);
        got = e.kind == "split-even" ? s.even : s.odd;
      }
      detail::compare_alternating(want, got, res.diffs);
    } else {
      res.diffs.push_back("unknown kind '" + e.kind + "'");
    }
  } catch (const std::exception& ex) {
    res.diffs.push_back(std::string("error: ") + ex.what());
  }
  res.pass = res.diffs.empty();
  return res;
}

/// Checks every entry, or only the one named by `only`.
inline std::vector<GoldenResult> paper_table(const std::vector<GoldenEntry>& corpus,
                                             const std::optional<std::string>& only = std::nullopt) {
  std::vector<GoldenResult> out;
  for (const auto& e : corpus) {
    if (only && e.id != *only) continue;
    out.push_back(check_entry(e));
  }
  return out;
}

}  // namespace fibsum
