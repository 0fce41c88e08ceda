#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weiljets/session.hpp"

namespace {

using nlohmann::json;

json rational_list(const std::string& text) {
    json out = json::array();
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) out.push_back(item);
    return out;
}

int emit(const std::string& session, const std::string& format, const weiljets::RunOptions& options) {
    std::string out, err;
    const int code = weiljets::run_session_text(session, format, options, out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil algebras, jets and A-points with exact rational arithmetic"};
    app.require_subcommand(1);

    std::string format = "json";
    weiljets::RunOptions options;

    std::string path;
    auto* run = app.add_subcommand("run", "Execute a session file");
    run->add_option("session", path, "Session JSON file")->required();
    run->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    run->add_flag("--fail-fast", options.fail_fast, "Stop at the first failing binding or command");
    run->add_flag("--verify-oracles", options.verify_oracles, "Cross-check results against independent routes");

    std::size_t vars = 0;
    std::vector<std::string> relations;
    unsigned order = 0;
    std::string op = "info";

    auto* algebra = app.add_subcommand("algebra", "One operation on R[x]/I");
    algebra->add_option("--vars", vars)->required();
    algebra->add_option("--rel", relations, "Relation (repeatable)");
    algebra->add_option("--order", order, "Truncation order");
    algebra->add_option("--op", op)->check(CLI::IsMember({"info", "basis", "derivations"}));
    algebra->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> generators;
    std::string point;
    unsigned hint = 0;
    auto* jet = app.add_subcommand("jet", "One operation on a jet");
    jet->add_option("--vars", vars)->required();
    jet->add_option("--gen", generators, "Generator (repeatable)");
    jet->add_option("--point", point, "Base point, comma separated");
    jet->add_option("--hint", hint, "Order hint")->required();
    jet->add_option("--op", op)->check(CLI::IsMember(
        {"info", "hat", "tangent", "cotangent", "fields", "normal_form", "derive", "contact", "taylor"}));
    jet->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    jet->add_flag("--verify-oracles", options.verify_oracles);

    std::vector<std::string> images;
    std::string f;
    auto* apoint = app.add_subcommand("apoint", "One operation on an A-point");
    apoint->add_option("--algebra-vars", vars, "Variables of A")->required();
    apoint->add_option("--rel", relations, "Relation of A (repeatable)");
    apoint->add_option("--order", order, "Truncation order of A");
    apoint->add_option("--image", images, "Image of one coordinate, comma separated (repeatable)")->required();
    apoint->add_option("--f", f, "Function to evaluate");
    apoint->add_option("--op", op)->check(CLI::IsMember({"info", "evaluate", "regularity"}));
    apoint->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*run) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read " << path << "\n";
            return 2;
        }
        std::stringstream text;
        text << in.rdbuf();
        return emit(text.str(), format, options);
    }

    json algebra_binding = {{"algebra", "A"}, {"vars", vars}, {"relations", relations}};
    if (order) algebra_binding["order"] = order;

    json session;
    if (*algebra) {
        session = {{"bind", {algebra_binding}}, {"run", {{{"op", op}, {"of", "A"}}}}};
    } else if (*jet) {
        json binding = {{"jet", "p"}, {"vars", vars}, {"generators", generators}, {"order_hint", hint}};
        if (!point.empty()) binding["point"] = rational_list(point);
        session = {{"bind", {binding}}, {"run", {{{"op", op}, {"of", "p"}}}}};
    } else {
        json imgs = json::array();
        for (const auto& i : images) imgs.push_back(rational_list(i));
        json command = {{"op", op}};
        if (op == "evaluate") {
            command["at"] = "P";
            command["f"] = f;
        } else {
            command["of"] = "P";
        }
        session = {{"bind", {algebra_binding, {{"apoint", "P"}, {"algebra", "A"}, {"images", imgs}}}}, {"run", {command}}};
    }
    return emit(session.dump(), format, options);
}
