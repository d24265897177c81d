#include "graphoid/codec.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "graphoid/errors.hpp"

namespace graphoid {

namespace {

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Record {
  char kind;
  std::vector<std::string> labels;
  int line;
};

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw GraphoidError("parse_syntax", "line " + std::to_string(line) + ": " + what);
}

// Parses the records on one line (several are allowed when space-separated).
void parse_records(const std::string& s, int line, std::vector<Record>& out) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= s.size()) return;
    char kind = s[i];
    if (std::string("VXPHT").find(kind) == std::string::npos)
      throw GraphoidError("record_kind",
                          "line " + std::to_string(line) + ": unknown record kind '" +
                              std::string(1, kind) + "'");
    ++i;
    skip_ws();
    if (i >= s.size() || s[i] != '(') syntax_error(line, "expected '(' after record kind");
    ++i;
    Record rec{kind, {}, line};
    skip_ws();
    if (i < s.size() && s[i] == ')') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && label_char(s[i])) ++i;
        if (i == start) syntax_error(line, "expected a label");
        rec.labels.emplace_back(s, start, i - start);
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        syntax_error(line, "expected ',' or ')' in record");
      }
    }
    size_t need = (kind == 'X' || kind == 'P') ? 4 : (kind == 'H' || kind == 'T') ? 1 : 0;
    if (need != 0 && rec.labels.size() != need)
      throw GraphoidError("record_arity", "line " + std::to_string(line) + ": record '" +
                                              std::string(1, kind) + "' needs " +
                                              std::to_string(need) + " labels, got " +
                                              std::to_string(rec.labels.size()));
    out.push_back(std::move(rec));
  }
}

}  // namespace

GpdDocument parse_gpd_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_name = false;
  std::string name;
  std::vector<Record> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    if (!saw_header) {
      if (body != "gpd 1")
        throw GraphoidError("gpd_header",
                            "line " + std::to_string(line_no) + ": expected header 'gpd 1'");
      saw_header = true;
      continue;
    }
    if (body.rfind("name", 0) == 0 &&
        (body.size() == 4 || std::isspace(static_cast<unsigned char>(body[4])))) {
      if (saw_name) syntax_error(line_no, "duplicate name line");
      std::istringstream ns(body.substr(4));
      if (!(ns >> name)) syntax_error(line_no, "name line needs a token");
      std::string extra;
      if (ns >> extra) syntax_error(line_no, "name line takes a single token");
      saw_name = true;
      continue;
    }
    parse_records(body, line_no, records);
  }
  if (!saw_header) throw GraphoidError("gpd_header", "missing 'gpd 1' header");

  // Label table and occurrence checking (P slots count as occurrences).
  std::map<std::string, int> label_id;
  std::vector<int> occurrences;
  auto intern = [&](const std::string& lab) {
    auto [it, fresh] = label_id.emplace(lab, static_cast<int>(label_id.size()));
    if (fresh) occurrences.push_back(0);
    ++occurrences[it->second];
    return it->second;
  };

  std::vector<Site> sites;
  // Real (non-virtual) slots per label class, as (site, slot) destinations.
  struct Slot {
    int site;
    int slot;
  };
  std::vector<std::vector<Slot>> real_slots;
  std::vector<int> dsu;
  auto ensure = [&](int id) {
    while (static_cast<int>(dsu.size()) <= id) {
      dsu.push_back(static_cast<int>(dsu.size()));
      real_slots.emplace_back();
    }
  };
  std::function<int(int)> find = [&](int x) {
    while (dsu[x] != x) {
      dsu[x] = dsu[dsu[x]];
      x = dsu[x];
    }
    return x;
  };

  for (const auto& rec : records) {
    if (rec.kind == 'P') {
      std::vector<int> ids;
      for (const auto& lab : rec.labels) {
        int id = intern(lab);
        ensure(id);
        ids.push_back(id);
      }
      dsu[find(ids[0])] = find(ids[2]);
      dsu[find(ids[1])] = find(ids[3]);
      continue;
    }
    Site s;
    switch (rec.kind) {
      case 'V': s.kind = SiteKind::Vertex; break;
      case 'X': s.kind = SiteKind::Crossing; break;
      case 'H': s.kind = SiteKind::Head; break;
      case 'T': s.kind = SiteKind::Tail; break;
      default: break;
    }
    s.over_even = false;  // X(a,b,c,d): the (b,d) strand at slots 1,3 is over
    int site_index = static_cast<int>(sites.size());
    for (int slot = 0; slot < static_cast<int>(rec.labels.size()); ++slot) {
      int id = intern(rec.labels[slot]);
      ensure(id);
      real_slots[id].push_back({site_index, slot});
      s.rot.push_back(-1);  // filled once classes are resolved
    }
    sites.push_back(std::move(s));
  }

  for (const auto& [lab, id] : label_id)
    if (occurrences[id] != 2)
      throw GraphoidError("label_count", "label '" + lab + "' occurs " +
                                             std::to_string(occurrences[id]) +
                                             " time(s); labels must occur exactly twice");

  // Resolve classes: each fused strand must have exactly two real ends (an
  // edge) or none (a circle through virtual crossings only).
  std::map<int, std::vector<Slot>> classes;
  for (int id = 0; id < static_cast<int>(dsu.size()); ++id) {
    auto& bucket = classes[find(id)];
    bucket.insert(bucket.end(), real_slots[id].begin(), real_slots[id].end());
  }
  int next_half = 0;
  std::vector<std::pair<int, int>> to_pair;
  int circles = 0;
  for (auto& [root, slots] : classes) {
    if (slots.size() == 2) {
      int h1 = next_half++;
      int h2 = next_half++;
      sites[slots[0].site].rot[slots[0].slot] = h1;
      sites[slots[1].site].rot[slots[1].slot] = h2;
      to_pair.emplace_back(h1, h2);
    } else if (slots.empty()) {
      ++circles;
    } else {
      throw GraphoidError("strand_ends", "a fused strand has " + std::to_string(slots.size()) +
                                             " loose end(s); expected 0 or 2");
    }
  }
  for (int c = 0; c < circles; ++c) {
    Site marker;
    marker.kind = SiteKind::Vertex;
    int h1 = next_half++;
    int h2 = next_half++;
    marker.rot = {h1, h2};
    sites.push_back(std::move(marker));
    to_pair.emplace_back(h1, h2);
  }
  std::vector<int> pairing(next_half, -1);
  for (auto [a, b] : to_pair) {
    pairing[a] = b;
    pairing[b] = a;
  }
  GpdDocument doc;
  doc.name = name;
  doc.diagram = Diagram(std::move(sites), std::move(pairing));
  return doc;
}

Diagram parse_gpd(const std::string& text) { return parse_gpd_document(text).diagram; }

Diagram load_gpd(const std::string& text) {
  Diagram d = parse_gpd(text);
  d.require_valid(true);
  return d;
}

std::string serialize_gpd(const Diagram& d, const std::string& name) {
  std::ostringstream os;
  os << "gpd 1\n";
  if (!name.empty()) os << "name " << name << "\n";
  auto label = [&](int h) { return "e" + std::to_string(d.edge_of_half(h)); };
  for (int si = 0; si < d.site_count(); ++si) {
    const Site& s = d.site(si);
    switch (s.kind) {
      case SiteKind::Vertex: {
        os << "V(";
        for (int i = 0; i < s.degree(); ++i) os << (i ? "," : "") << label(s.rot[i]);
        os << ")\n";
        break;
      }
      case SiteKind::Crossing: {
        int start = s.over_even ? 1 : 0;  // X(a,b,c,d) lists an under slot first
        os << "X(";
        for (int i = 0; i < 4; ++i) os << (i ? "," : "") << label(s.rot[(start + i) % 4]);
        os << ")\n";
        break;
      }
      case SiteKind::Head: os << "H(" << label(s.rot[0]) << ")\n"; break;
      case SiteKind::Tail: os << "T(" << label(s.rot[0]) << ")\n"; break;
      case SiteKind::Free:
        throw GraphoidError("free_end_present", "free endpoints cannot be serialized");
    }
  }
  return os.str();
}

}  // namespace graphoid
