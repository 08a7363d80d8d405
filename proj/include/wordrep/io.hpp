#ifndef WORDREP_IO_HPP
#define WORDREP_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// Word text format: whitespace-separated tokens, one word per line.
Word parse_word(const std::string& line);
// First non-empty, non-comment line of the stream.
Word read_word(std::istream& in);

// Graph text format: header line "n m", then m lines "u v"; '#' starts a
// comment. Vertices are named by the edge endpoints; n is a consistency
// check. Throws std::runtime_error with a line number on malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json perms_to_json(const PermSequence& seq);

} // namespace wordrep

#endif
