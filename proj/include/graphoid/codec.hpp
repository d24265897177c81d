#pragma once

#include <string>

#include "graphoid/diagram.hpp"

namespace graphoid {

// GPD is the line-oriented text format for diagrams.
//
//   gpd 1                      header, required first
//   name <token>               optional display name
//   V(a,b,...)                 flat vertex, counterclockwise labels
//   X(a,b,c,d)                 crossing, counterclockwise; (a,c) under, (b,d) over
//   P(a,b,c,d)                 virtual crossing, counterclockwise; erased on read
//   H(a)  T(a)                 head / tail endpoints
//
// '#' starts a comment.  Labels are [A-Za-z0-9_]+ and each label must occur
// exactly twice.  Virtual crossings never survive parsing: the (a,c) and
// (b,d) strands are fused, and strands that close up entirely through virtual
// crossings become bare circles (degree-2 marker vertices).
struct GpdDocument {
  std::string name;
  Diagram diagram;
};

// Throws GraphoidError (codes gpd_header, parse_syntax, record_kind,
// record_arity, label_count, strand_ends) on malformed input.  Endpoint
// discipline is not enforced here; call diagram.validate(true) for that.
GpdDocument parse_gpd_document(const std::string& text);
Diagram parse_gpd(const std::string& text);

// Strict parse used by the CLI and file loaders: also requires the endpoint
// discipline (no endpoints, or exactly one head and one tail).
Diagram load_gpd(const std::string& text);

// Serialization never emits P records (the encoding is virtual-free).  Free
// endpoints cannot be serialized.
std::string serialize_gpd(const Diagram& d, const std::string& name = "");

}  // namespace graphoid
