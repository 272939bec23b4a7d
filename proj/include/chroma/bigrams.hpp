#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chroma/common.hpp"
#include "chroma/io_util.hpp"

namespace chroma {

struct BigramRecord {
  std::string attribute;
  std::string object;
  std::uint64_t count = 0;
};

// Attribute-object co-occurrence graph. Ordered maps keep every traversal
// deterministic.
struct BipartiteGraph {
  std::map<std::string, std::map<std::string, std::uint64_t>> attr_to_obj;
  std::map<std::string, std::map<std::string, std::uint64_t>> obj_to_attr;

  void add(const BigramRecord& rec) {
    attr_to_obj[rec.attribute][rec.object] += rec.count;
    obj_to_attr[rec.object][rec.attribute] += rec.count;
  }

  bool has_attribute(const std::string& a) const { return attr_to_obj.count(a) > 0; }

  std::uint64_t edge_count(const std::string& a, const std::string& o) const {
    const auto it = attr_to_obj.find(a);
    if (it == attr_to_obj.end()) return 0;
    const auto jt = it->second.find(o);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::size_t num_edges() const {
    std::size_t n = 0;
    for (const auto& [a, objs] : attr_to_obj) n += objs.size();
    return n;
  }
};

// One token per line; lowercased. Blank lines skipped.
inline std::set<std::string> read_word_list(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tok;
    if (ss >> tok) words.insert(to_lower(tok));
  }
  return words;
}

inline std::set<std::string> read_word_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open word list");
  return read_word_list(in);
}

// Parses `<attribute> <object> <count>` lines, keeping only pairs whose first
// token is in the adjective list and second in the concrete-noun list.
// Duplicate pairs have their counts summed. Malformed lines are fatal under
// strict, otherwise reported to `warnings` and skipped.
inline BipartiteGraph parse_bigrams(std::istream& corpus, const std::set<std::string>& adjectives,
                                    const std::set<std::string>& nouns, bool strict = false,
                                    std::vector<std::string>* warnings = nullptr) {
  if (adjectives.empty() || nouns.empty())
    throw UsageError("parse_bigrams: adjective and noun lists must be non-empty");
  BipartiteGraph graph;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(corpus, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string attr, obj, count_tok, extra;
    std::uint64_t count = 0;
    bool ok = static_cast<bool>(ss >> attr >> obj >> count_tok) && !(ss >> extra);
    if (ok) {
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(count_tok, &pos);
        ok = pos == count_tok.size() && v >= 1;
        count = ok ? static_cast<std::uint64_t>(v) : 0;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      const std::string msg = "line " + std::to_string(lineno) + ": malformed bigram record '" +
                              line + "'";
      if (strict) throw DataError("parse_bigrams: " + msg);
      if (warnings) warnings->push_back(msg);
      continue;
    }
    attr = to_lower(attr);
    obj = to_lower(obj);
    if (adjectives.count(attr) == 0 || nouns.count(obj) == 0) continue;
    graph.add({attr, obj, count});
  }
  return graph;
}

}  // namespace chroma
