#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weiljets/polynomial.hpp"

namespace weiljets {

enum class BindingKind { Algebra, Jet, Point, Group };

struct Binding {
    std::string name;
    BindingKind kind = BindingKind::Algebra;
    std::size_t vars = 0;
    // algebra
    std::vector<Polynomial> relations;
    std::optional<unsigned> order;
    std::vector<std::string> tensor;
    // jet
    Vector point;
    std::vector<Polynomial> generators;
    unsigned order_hint = 0;
    // point
    std::string algebra;
    std::vector<Vector> images;
    // group
    std::vector<Polynomial> law;
    Vector identity;
    std::vector<Polynomial> inverse;
};

struct Command {
    std::size_t index = 0;
    std::string op;
    /// Referenced bindings in the order the operation expects them.
    std::vector<std::string> refs;
    std::map<std::string, std::vector<Polynomial>> polys;
    std::map<std::string, std::vector<Vector>> vectors;
    std::size_t vars = 0;
    std::optional<std::string> as;
};

struct Session {
    std::vector<Binding> bindings;
    std::vector<Command> commands;
};

/// Throws Error (ParseError, UnknownName, SchemaViolation) on invalid input.
Session parse_session(const std::string& text);

struct RunOptions {
    bool fail_fast = false;
    bool verify_oracles = false;
};

struct Report {
    nlohmann::json body;
    bool has_errors = false;
};

Report execute(const Session& session, const RunOptions& options = {});

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Exit code convention: 0 success, 1 command error, 2 parse error.
int run_session_text(const std::string& text, const std::string& format, const RunOptions& options,
                     std::string& out, std::string& err);

}  // namespace weiljets
