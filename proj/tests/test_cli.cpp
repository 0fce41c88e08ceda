#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weiljets/error.hpp"
#include "weiljets/jet.hpp"
#include "weiljets/poly_text.hpp"
#include "weiljets/session.hpp"

using namespace weiljets;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run_text(const std::string& text, const std::string& format = "json", RunOptions options = {}) {
    Outcome o;
    o.code = run_session_text(text, format, options, o.out, o.err);
    return o;
}

Outcome run_binary(const std::string& args) {
    Outcome o;
    const std::string command = std::string(WEILJETS_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) o.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

ErrorKind parse_error_kind(const std::string& text) {
    try {
        parse_session(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse failure");
    return ErrorKind::Internal;
}

const std::filesystem::path sessions_dir{WEILJETS_SESSIONS};

}  // namespace

TEST_CASE("parse_session reads one binding and one command") {
    const Session s = parse_session(R"({"bind":[{"algebra":"A","vars":1,"relations":["x^2"]}],"run":[{"op":"info","of":"A"}]})");
    REQUIRE(s.bindings.size() == 1);
    REQUIRE(s.commands.size() == 1);
    CHECK(s.bindings[0].kind == BindingKind::Algebra);
    CHECK(s.commands[0].refs == std::vector<std::string>{"A"});
}

TEST_CASE("unbound and forward references are rejected") {
    CHECK(parse_error_kind(R"({"run":[{"op":"info","of":"B"}]})") == ErrorKind::UnknownName);
    CHECK(parse_error_kind(R"({"bind":[{"apoint":"P","algebra":"A","images":[[0,1]]},{"algebra":"A","vars":1,"order":1}]})") ==
          ErrorKind::UnknownName);
    CHECK(parse_error_kind(R"({"bind":[{"algebra":"A","vars":1,"order":1},{"jet":"A","vars":1,"order_hint":1}]})") ==
          ErrorKind::SchemaViolation);
    CHECK(parse_error_kind(R"({"bind":[{"jet":"p","vars":2}]})") == ErrorKind::SchemaViolation);
    CHECK(parse_error_kind(R"({"bind":[{"jet":"p","vars":2,"order_hint":1,"colour":1}]})") == ErrorKind::SchemaViolation);
    CHECK(parse_error_kind(R"({"run":[{"op":"frobnicate"}]})") == ErrorKind::SchemaViolation);
    CHECK(parse_error_kind(R"({"bind":[{"jet":"p","vars":2,"generators":["y - w"],"order_hint":1}]})") == ErrorKind::ParseError);
}

TEST_CASE("syntax errors carry line and column") {
    const Outcome o = run_text("{\n  \"bind\": [\n");
    CHECK(o.code == 2);
    CHECK(o.err.find("line 3") != std::string::npos);
    CHECK(o.err.find("column") != std::string::npos);
}

TEST_CASE("jet generators round-trip through the polynomial grammar") {
    const Session s = parse_session(R"({"bind":[{"jet":"p","vars":2,"generators":["y - x^2"],"order_hint":2}]})");
    REQUIRE(s.bindings[0].generators.size() == 1);
    CHECK(format_polynomial(s.bindings[0].generators[0]) == "y - x^2");
    CHECK(s.bindings[0].order_hint == 2);
}

TEST_CASE("info on the dual numbers") {
    const Outcome o = run_text(R"({"bind":[{"algebra":"D","vars":1,"order":1}],"run":[{"op":"info","of":"D"}]})");
    CHECK(o.code == 0);
    const json r = json::parse(o.out).at("results").at(0).at("result");
    CHECK(r == json{{"dim", 2}, {"order", 1}, {"width", 1}, {"der_dim", 1}});
}

TEST_CASE("algebra order is detected from the relations") {
    const Outcome o = run_text(R"({"bind":[{"algebra":"A","vars":2,"relations":["x^2","y^2"]},{"algebra":"B","vars":1,"relations":["x^4"]}],
        "run":[{"op":"info","of":"A"},{"op":"info","of":"B"}]})");
    const json r = json::parse(o.out).at("results");
    CHECK(r[0]["result"]["dim"] == 4);
    CHECK(r[0]["result"]["order"] == 2);
    CHECK(r[1]["result"]["dim"] == 4);
    CHECK(r[1]["result"]["order"] == 3);
    const Outcome bad = run_text(R"({"bind":[{"algebra":"A","vars":2,"relations":["x^2"]}]})");
    CHECK(bad.code == 1);
}

TEST_CASE("derive on (z, x^2) + m^3 reports the derived jet and the Taylor condition") {
    const Outcome o = run_text(
        R"({"bind":[{"jet":"p","vars":3,"generators":["z","x^2"],"order_hint":2}],"run":[{"op":"derive","of":"p"}]})", "json",
        RunOptions{false, true});
    CHECK(o.code == 0);
    const json r = json::parse(o.out).at("results").at(0).at("result");
    const Jet expected = jet_from_ideal(3, Vector(3), {parse_polynomial("z", 3), parse_polynomial("x", 3)}, 1);
    json gens = json::array();
    for (const auto& g : expected.generators_at_point()) gens.push_back(format_polynomial(g));
    CHECK(r["derived"]["generators"] == gens);
    CHECK(r["derived"]["order"] == 1);
    CHECK(r.contains("taylor_condition"));
    CHECK(r["oracle_agrees"] == true);
    CHECK(r["fields_preserved"] == true);
}

TEST_CASE("empty command list") {
    const Outcome o = run_text(R"({"run":[]})");
    CHECK(o.code == 0);
    CHECK(json::parse(o.out) == json{{"bindings", json::array()}, {"results", json::array()}});
}

TEST_CASE("errors are reported per command and the session continues") {
    const std::string text = R"({"bind":[{"jet":"p","vars":2,"generators":["y"],"order_hint":1}],
        "run":[{"op":"differential","of":"p","f":"x","tangent":[0,1,1,0]},{"op":"info","of":"p"}]})";
    const Outcome o = run_text(text);
    CHECK(o.code == 1);
    const json r = json::parse(o.out).at("results");
    REQUIRE(r.size() == 2);
    CHECK(r[0]["error"]["kind"] == "FNotInIdeal");
    CHECK(r[1].contains("result"));

    const Outcome text_mode = run_text(text, "text");
    CHECK(text_mode.out.find("[0] differential p: error FNotInIdeal") != std::string::npos);

    const Outcome fast = run_text(text, "json", RunOptions{true, false});
    CHECK(fast.code == 1);
    CHECK(json::parse(fast.out).at("results").size() == 1);
}

TEST_CASE("failed bindings poison their dependents only") {
    const Outcome o = run_text(R"({"bind":[{"jet":"p","vars":1,"generators":["x^3"],"order_hint":1},{"algebra":"D","vars":1,"order":1}],
        "run":[{"op":"info","of":"p"},{"op":"info","of":"D"}]})");
    CHECK(o.code == 1);
    const json body = json::parse(o.out);
    CHECK(body["bindings"][0]["error"]["kind"] == "HintTooSmall");
    CHECK(body["results"][0]["error"]["kind"] == "HintTooSmall");
    CHECK(body["results"][1].contains("result"));
}

TEST_CASE("text mode jet lines") {
    const Outcome o = run_text(R"({"bind":[{"jet":"p","vars":2,"generators":["x y"],"order_hint":2}],"run":[{"op":"info","of":"p"}]})",
                               "text");
    CHECK(o.out == "[0] info: jet p: order 2, width 2, NOT classical (dim 5 != 6), at [0, 0], generators [x y]\n");
}

TEST_CASE("reports are byte-stable and round-trip") {
    for (const auto& entry : std::filesystem::directory_iterator(sessions_dir)) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().string());
        const std::string text = slurp(entry.path());
        const Outcome a = run_text(text);
        const Outcome b = run_text(text);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
        CHECK(run_text(text, "text").out == run_text(text, "text").out);
    }
}

TEST_CASE("the session corpus matches its golden reports") {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(sessions_dir)) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().string());
        const Outcome o = run_binary("run " + entry.path().string());
        CHECK(o.out == slurp(sessions_dir / "expected" / entry.path().filename()));
        CHECK(o.code == (entry.path().stem() == "errors" ? 1 : 0));
        ++seen;
    }
    CHECK(seen == 5);
}

TEST_CASE("exit codes of the binary") {
    CHECK(run_binary("run " + (sessions_dir / "missing.json").string()).code == 2);
    CHECK(run_binary("bogus").code == 2);
    CHECK(run_binary("algebra").code == 2);
    CHECK(run_binary("algebra --vars 1 --order 1").code == 0);
    CHECK(run_binary("jet --vars 1 --gen x^3 --hint 1").code == 1);
    CHECK(run_binary("jet --vars 2 --gen 'y - w' --hint 1").code == 2);
}

TEST_CASE("shortcuts agree with the equivalent session") {
    const Outcome shortcut = run_binary("jet --vars 3 --gen z --gen x^2 --hint 2 --op derive");
    const Outcome session = run_text(
        R"({"bind":[{"jet":"p","vars":3,"generators":["z","x^2"],"order_hint":2,"point":["0","0","0"]}],"run":[{"op":"derive","of":"p"}]})");
    CHECK(shortcut.code == 0);
    CHECK(shortcut.out == session.out);

    const Outcome point = run_binary("apoint --algebra-vars 1 --order 1 --image 2,1 --image 3,0 --op evaluate --f 'x y'");
    CHECK(json::parse(point.out)["results"][0]["result"]["components"] == json{"6", "3"});
}
