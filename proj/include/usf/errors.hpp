#pragma once

#include <stdexcept>
#include <string>

namespace usf {

// Error categories used across the library. Each names the violated
// invariant or precondition rather than the call site.
enum class errc {
    empty_boundary,
    dangling_incidence,
    edge_with_no_vertex,
    duplicate_id,
    orphan_edge,
    boundary_collision,
    not_a_graph,
    not_a_forest,
    bad_dimension,
    missing_cap,
    size_guard,
    inconclusive_at_cap,
};

const char* errc_name(errc c);

class usf_error : public std::runtime_error {
  public:
    usf_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

// Raised by the text/JSON readers; carries a 1-based line number when known.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

} // namespace usf
